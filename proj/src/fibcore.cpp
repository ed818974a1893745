#include "fibdig/fibcore.hpp"

#include <bit>
#include <stdexcept>

namespace fibdig {

Modulus::Modulus(std::uint64_t m) : m_(m) {
  if (m < 2 || m > kMax) {
    throw std::invalid_argument("modulus must be in [2, 10^12], got " +
                                std::to_string(m));
  }
}

BigNat fib_iter_exact(FibIndex n) {
  BigNat a;             // F_0
  BigNat b(1);          // F_1
  for (FibIndex i = 0; i < n; ++i) {
    BigNat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

std::pair<BigNat, BigNat> fib_pair_exact(FibIndex n) {
  BigNat a;     // F_0
  BigNat b(1);  // F_1
  if (n == 0) return {a, b};
  int bits = std::bit_width(n);
  for (int i = bits - 1; i >= 0; --i) {
    // (a, b) = (F_k, F_{k+1}) -> (F_2k, F_2k+1)
    BigNat two_b_minus_a = b + b - a;
    BigNat c = a * two_b_minus_a;
    BigNat d = a * a + b * b;
    if ((n >> i) & 1u) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

BigNat fib_exact(FibIndex n) { return fib_pair_exact(n).first; }

std::pair<std::uint64_t, std::uint64_t> fib_pair_mod(FibIndex n, Modulus mod) {
  const std::uint64_t m = mod.value();
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  if (n == 0) return {a, b};
  using u128 = unsigned __int128;
  int bits = std::bit_width(n);
  for (int i = bits - 1; i >= 0; --i) {
    // 2b - a + m stays below 3 * 10^12, well inside 64 bits.
    std::uint64_t t = 2 * b + m - a;
    if (t >= m) t %= m;
    std::uint64_t c = static_cast<std::uint64_t>(u128(a) * t % m);
    std::uint64_t d =
        static_cast<std::uint64_t>((u128(a) * a + u128(b) * b) % m);
    if ((n >> i) & 1u) {
      a = d;
      b = c + d;
      if (b >= m) b -= m;
    } else {
      a = c;
      b = d;
    }
  }
  return {a, b};
}

std::uint64_t fib_mod(FibIndex n, Modulus m) { return fib_pair_mod(n, m).first; }

ResidueStream::ResidueStream(Modulus m, FibIndex start) : cur_{start, 0, 0, m.value()} {
  auto [a, b] = fib_pair_mod(start, m);
  cur_.a = a;
  cur_.b = b;
}

}  // namespace fibdig
