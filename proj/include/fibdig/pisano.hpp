#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fibdig/fibcore.hpp"

namespace fibdig {

/// Minimal period of the Fibonacci sequence modulo m.
struct PisanoResult {
  std::uint64_t modulus;
  std::uint64_t period;

  friend bool operator==(const PisanoResult&, const PisanoResult&) = default;
};

/// The set of residues mod m attained by some F_n, decided by scanning one
/// full period. Stored as a bitmap, one bit per residue class.
class ResidueSet {
 public:
  static constexpr std::uint64_t kMaxModulus = 100'000'000;  // 10^8

  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t period() const { return period_; }
  std::uint64_t attained_count() const { return count_; }

  bool contains(std::uint64_t r) const {
    return r < modulus_ && ((bits_[r >> 6] >> (r & 63)) & 1u) != 0;
  }

 private:
  friend ResidueSet residue_set(Modulus m);

  std::uint64_t modulus_ = 0;
  std::uint64_t period_ = 0;
  std::uint64_t count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Minimal period: the first index p > 0 with (F_p, F_{p+1}) = (0, 1) mod m.
/// The recurrence runs both directions, so the sequence mod m is purely
/// periodic from index 0 and the seed pair (0, 1) is the right target.
/// Iteration is capped at m^2 + 1 steps (pigeonhole bound); the cap binding
/// would be an implementation bug and throws std::logic_error.
PisanoResult pisano_period(Modulus m);

/// Per-modulus periods in input order. Entries are validated up front so a
/// bad modulus is reported with its value; valid entries may be computed in
/// parallel.
std::vector<PisanoResult> pisano_table(std::span<const std::uint64_t> moduli);

/// Residues attained over one full period. Rejects m > 10^8 (bitmap memory).
ResidueSet residue_set(Modulus m);

}  // namespace fibdig
