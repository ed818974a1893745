#pragma once

#include <cstdint>
#include <utility>

#include "fibdig/bignat.hpp"

namespace fibdig {

/// Index into the Fibonacci sequence with F_0 = 0, F_1 = 1, F_2 = 1, ...
using FibIndex = std::uint64_t;

/// Modulus for residue arithmetic. Capped at 10^12 so that the sum of two
/// residues stays below 2^63 and products fit 128-bit intermediates.
class Modulus {
 public:
  static constexpr std::uint64_t kMax = 1'000'000'000'000ull;

  explicit Modulus(std::uint64_t m);
  std::uint64_t value() const { return m_; }

 private:
  std::uint64_t m_;
};

/// One step of a residue scan: (F_index mod m, F_{index+1} mod m).
struct ResiduePair {
  FibIndex index;
  std::uint64_t a;  // F_index mod m
  std::uint64_t b;  // F_{index+1} mod m
  std::uint64_t modulus;

  friend bool operator==(const ResiduePair&, const ResiduePair&) = default;

  ResiduePair stepped() const {
    std::uint64_t next = a + b;
    if (next >= modulus) next -= modulus;
    return {index + 1, b, next, modulus};
  }
};

/// F_n by direct addition from (F_0, F_1) = (0, 1). O(n) big-number adds;
/// the independent reference for fib_exact.
BigNat fib_iter_exact(FibIndex n);

/// (F_n, F_{n+1}) via fast doubling: F_2k = F_k (2 F_{k+1} - F_k),
/// F_{2k+1} = F_k^2 + F_{k+1}^2. O(log n) big multiplications.
std::pair<BigNat, BigNat> fib_pair_exact(FibIndex n);

/// F_n via fast doubling.
BigNat fib_exact(FibIndex n);

/// (F_n mod m, F_{n+1} mod m) via fast doubling with reduction at each step.
std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(FibIndex n, Modulus m);

/// F_n mod m.
std::uint64_t fib_mod(FibIndex n, Modulus m);

/// Unbounded stream of consecutive residue pairs, seeded at any start index
/// via fib_pair_mod. Single consumer; parallel scans make one per chunk.
class ResidueStream {
 public:
  ResidueStream(Modulus m, FibIndex start);

  const ResiduePair& current() const { return cur_; }

  /// Returns the current pair and advances by one index.
  ResiduePair next() {
    ResiduePair out = cur_;
    cur_ = cur_.stepped();
    return out;
  }

 private:
  ResiduePair cur_;
};

}  // namespace fibdig
