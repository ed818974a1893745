#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "fibdig/bignat.hpp"
#include "fibdig/fibcore.hpp"

namespace fibdig {

/// A base B in 2..36 together with a non-empty subset of {0, ..., B-1},
/// kept as a bitmask for O(1) membership in scan inner loops.
class DigitSet {
 public:
  DigitSet(std::uint32_t base, std::span<const std::uint8_t> members);
  static DigitSet complement(std::uint32_t base,
                             std::span<const std::uint8_t> omitted);

  std::uint32_t base() const { return base_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(std::uint32_t digit) const { return (mask_ >> digit) & 1u; }
  std::vector<std::uint8_t> members() const;

  friend bool operator==(const DigitSet&, const DigitSet&) = default;

 private:
  DigitSet(std::uint32_t base, std::uint64_t mask) : base_(base), mask_(mask) {}

  std::uint32_t base_;
  std::uint64_t mask_;
};

struct ScanException {
  FibIndex index;
  BigNat value;

  friend bool operator==(const ScanException&, const ScanException&) = default;
};

/// Every scanned tail contains a digit of the set. By periodicity this
/// certifies all Fibonacci numbers beyond the scan as well, except for the
/// listed small terms whose full digit lists avoid the set.
struct Covered {
  std::vector<ScanException> exceptions;

  friend bool operator==(const Covered&, const Covered&) = default;
};

/// Some scanned tail avoids the set, so the last-n-digits method cannot
/// certify coverage at this width. Not a counterexample: the witness's
/// higher digits may well contain the set.
struct Inconclusive {
  FibIndex witness_index;
  std::vector<std::uint8_t> witness_tail;  // n digits, most significant first

  friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

using ScanVerdict = std::variant<Covered, Inconclusive>;

/// Number of terms whose tails must be checked so that tail verdicts repeat:
/// 15 * 10^(n-1) for base 10 and n >= 3 (the known period of the last n
/// decimal digits), otherwise the Pisano period of B^n computed directly.
/// Rejects B^n above the modulus ceiling.
std::uint64_t required_scan_bound(std::uint32_t n_digits, std::uint32_t base);

struct ScanConfig {
  DigitSet set;
  std::uint32_t n_digits;
  std::uint64_t scan_length;
  Modulus modulus;  // base^n_digits

  static ScanConfig make(DigitSet set, std::uint32_t n_digits);
};

/// Scan indices 1 .. scan_length. For each k the tail is the n-digit
/// zero-padded representation of F_k mod B^n. A tail that avoids the set
/// short-circuits to Inconclusive with the minimum such index as witness;
/// otherwise the verdict is Covered with the exceptions accumulated from
/// terms below B^n. Verifies that scan_length is a period of the tail
/// sequence before scanning and rejects it otherwise.
///
/// The chunked form partitions the range into `chunks` contiguous pieces,
/// each seeded by fast doubling and scanned in parallel; the merged verdict
/// is identical to the serial one for every chunk count. chunks == 0 picks
/// one chunk per available thread.
ScanVerdict scan_digit_set(const ScanConfig& config, unsigned chunks = 0);

/// Single-loop reference implementation, kept as the oracle for the chunked
/// kernel.
ScanVerdict scan_digit_set_serial(const ScanConfig& config);

/// The terms F_1, F_2, ... that fit below B^n, with exact values and a flag
/// for whether the full (unpadded) digit list avoids the set. These are the
/// only candidates for a Covered verdict's exception list.
struct SmallTerm {
  FibIndex index;
  std::uint64_t value;
  bool avoids_set;
};
std::vector<SmallTerm> terms_below_modulus(const DigitSet& set,
                                           std::uint32_t n_digits);

/// 1-based position, counting from the least significant digit, of the first
/// digit of x that belongs to the set; nullopt when no digit does.
std::optional<std::uint32_t> rightmost_hit_depth(const BigNat& x,
                                                 const DigitSet& set);

struct DepthRecord {
  FibIndex index;
  std::uint32_t depth;

  friend bool operator==(const DepthRecord&, const DepthRecord&) = default;
};

/// Indices in F_1..F_max_index where the running maximum hit depth strictly
/// increases, plus (separately) the indices whose digits avoid the set
/// entirely.
struct DepthSurvey {
  std::vector<DepthRecord> records;
  std::vector<FibIndex> no_hit;
};

DepthSurvey max_depth_survey(FibIndex max_index, const DigitSet& set);

}  // namespace fibdig
