#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fibdig/bignat.hpp"
#include "fibdig/fibcore.hpp"

namespace fibdig {

/// The numeral made of `length` copies of `digit` in the given base.
/// Rejects digit 0 (not a numeral) and digit >= base.
BigNat repdigit_value(std::uint8_t digit, std::uint32_t length,
                      std::uint32_t base);

/// Index of x in the Fibonacci sequence, or nullopt. Generates terms until
/// one reaches x; returns the smallest matching index (so 1 for the value 1).
std::optional<FibIndex> fibonacci_index(const BigNat& x);

struct RepdigitShortCase {
  std::uint32_t length;
  BigNat value;
  std::optional<FibIndex> fibonacci_index;
};

/// Record of a residue-exclusion argument for repdigits of one digit.
///
/// With p prime, p | B and m = p^k, B^k = 0 mod m, so every repdigit of d
/// with length >= k falls in a single residue class r mod m. If the
/// Fibonacci sequence never attains r over a full period, the only possible
/// Fibonacci repdigits of d are the short cases of length < k, which are
/// checked exactly. When r is attained the attempt proves nothing for this
/// modulus (it does not assert that long Fibonacci repdigits exist).
struct RepdigitProof {
  std::uint8_t digit;
  std::uint32_t base;
  std::uint64_t prime;
  std::uint32_t exponent;
  std::uint64_t modulus;            // prime^exponent
  std::uint64_t excluded_residue;   // repdigit(digit, exponent) mod modulus
  bool long_case_excluded;          // excluded_residue never attained
  std::vector<RepdigitShortCase> short_cases;  // lengths 1 .. exponent-1

  bool conclusive() const { return long_case_excluded; }
};

/// Runs the exclusion argument for (digit, prime, exponent, base).
/// Rejects non-prime p, p not dividing B, and p^k beyond the residue-set
/// ceiling; a modulus that merely fails to exclude is reported in the
/// result, not an error.
RepdigitProof prove_repdigit_impossible(std::uint8_t digit, std::uint64_t prime,
                                        std::uint32_t exponent,
                                        std::uint32_t base);

/// Searches moduli p^k with p a prime factor of base, k ascending up to
/// max_exponent, and returns the first conclusive proof, or nullopt when no
/// tried modulus excludes the long case.
std::optional<RepdigitProof> find_repdigit_proof(std::uint8_t digit,
                                                 std::uint32_t base,
                                                 std::uint32_t max_exponent = 20);

}  // namespace fibdig
