#include "fibdig/repdigit.hpp"

#include <stdexcept>
#include <string>

#include "fibdig/pisano.hpp"

namespace fibdig {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

BigNat repdigit_value(std::uint8_t digit, std::uint32_t length,
                      std::uint32_t base) {
  if (base < 2 || base > 36) {
    throw std::invalid_argument("base must be in [2, 36]");
  }
  if (digit == 0 || digit >= base) {
    throw std::invalid_argument("repdigit digit must be in [1, base-1], got " +
                                std::to_string(digit));
  }
  if (length == 0) {
    throw std::invalid_argument("repdigit length must be positive");
  }
  BigNat out;
  for (std::uint32_t i = 0; i < length; ++i) {
    out.mul_small(base);
    out.add_small(digit);
  }
  return out;
}

std::optional<FibIndex> fibonacci_index(const BigNat& x) {
  BigNat a;     // F_0
  BigNat b(1);  // F_1
  FibIndex k = 0;
  while (a < x) {
    BigNat next = a + b;
    a = std::move(b);
    b = std::move(next);
    ++k;
  }
  if (a == x) return k;
  return std::nullopt;
}

RepdigitProof prove_repdigit_impossible(std::uint8_t digit, std::uint64_t prime,
                                        std::uint32_t exponent,
                                        std::uint32_t base) {
  if (!is_prime(prime)) {
    throw std::invalid_argument(std::to_string(prime) + " is not prime");
  }
  if (base % prime != 0) {
    throw std::invalid_argument(std::to_string(prime) + " does not divide base " +
                                std::to_string(base));
  }
  if (exponent == 0) {
    throw std::invalid_argument("exponent must be positive");
  }
  std::uint64_t modulus = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (modulus > ResidueSet::kMaxModulus / prime) {
      throw std::invalid_argument("prime^exponent exceeds the residue-set "
                                  "ceiling of 10^8");
    }
    modulus *= prime;
  }

  RepdigitProof proof;
  proof.digit = digit;
  proof.base = base;
  proof.prime = prime;
  proof.exponent = exponent;
  proof.modulus = modulus;
  proof.excluded_residue = repdigit_value(digit, exponent, base).mod_u64(modulus);

  ResidueSet attained = residue_set(Modulus(modulus));
  proof.long_case_excluded = !attained.contains(proof.excluded_residue);

  for (std::uint32_t len = 1; len < exponent; ++len) {
    BigNat value = repdigit_value(digit, len, base);
    std::optional<FibIndex> idx = fibonacci_index(value);
    proof.short_cases.push_back(RepdigitShortCase{len, std::move(value), idx});
  }
  return proof;
}

std::optional<RepdigitProof> find_repdigit_proof(std::uint8_t digit,
                                                 std::uint32_t base,
                                                 std::uint32_t max_exponent) {
  std::vector<std::uint64_t> primes = prime_factors(base);
  for (std::uint32_t k = 1; k <= max_exponent; ++k) {
    for (std::uint64_t p : primes) {
      // Stay under the residue-set ceiling; larger powers of this prime
      // would also blow it, but smaller primes may still fit.
      std::uint64_t modulus = 1;
      bool fits = true;
      for (std::uint32_t i = 0; i < k; ++i) {
        if (modulus > ResidueSet::kMaxModulus / p) {
          fits = false;
          break;
        }
        modulus *= p;
      }
      if (!fits) continue;
      RepdigitProof proof = prove_repdigit_impossible(digit, p, k, base);
      if (proof.conclusive()) return proof;
    }
  }
  return std::nullopt;
}

}  // namespace fibdig
