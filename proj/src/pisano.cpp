#include "fibdig/pisano.hpp"

#include <omp.h>

#include <stdexcept>
#include <string>

namespace fibdig {

PisanoResult pisano_period(Modulus mod) {
  const std::uint64_t m = mod.value();
  using u128 = unsigned __int128;
  const u128 cap = u128(m) * m + 1;
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  std::uint64_t steps = 0;
  do {
    std::uint64_t next = a + b;
    if (next >= m) next -= m;
    a = b;
    b = next;
    ++steps;
    if (u128(steps) > cap) {
      throw std::logic_error("pisano period exceeded the m^2+1 bound for m = " +
                             std::to_string(m));
    }
  } while (!(a == 0 && b == 1));
  return {m, steps};
}

std::vector<PisanoResult> pisano_table(std::span<const std::uint64_t> moduli) {
  std::vector<Modulus> checked;
  checked.reserve(moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    try {
      checked.emplace_back(moduli[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("entry " + std::to_string(i) + ": " +
                                  e.what());
    }
  }
  std::vector<PisanoResult> out(checked.size(), PisanoResult{0, 0});
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < checked.size(); ++i) {
    out[i] = pisano_period(checked[i]);
  }
  return out;
}

ResidueSet residue_set(Modulus mod) {
  const std::uint64_t m = mod.value();
  if (m > ResidueSet::kMaxModulus) {
    throw std::invalid_argument("residue_set modulus capped at 10^8, got " +
                                std::to_string(m));
  }
  ResidueSet out;
  out.modulus_ = m;
  out.bits_.assign((m + 63) / 64, 0);
  auto mark = [&](std::uint64_t r) {
    std::uint64_t& word = out.bits_[r >> 6];
    std::uint64_t bit = 1ull << (r & 63);
    if ((word & bit) == 0) {
      word |= bit;
      ++out.count_;
    }
  };
  // Walk indices 0 .. pi(m)-1; one full period attains every residue the
  // sequence ever attains.
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  std::uint64_t steps = 0;
  do {
    mark(a);
    std::uint64_t next = a + b;
    if (next >= m) next -= m;
    a = b;
    b = next;
    ++steps;
  } while (!(a == 0 && b == 1));
  out.period_ = steps;
  return out;
}

}  // namespace fibdig
