#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fibdig/fibcore.hpp"
#include "testutil.hpp"

using namespace fibdig;

TEST_SUITE("fibcore") {

TEST_CASE("iterative oracle fixtures") {
  CHECK(fib_iter_exact(0).is_zero());
  CHECK(fib_iter_exact(1) == BigNat(1));
  CHECK(fib_iter_exact(10) == BigNat(55));
  CHECK(fib_iter_exact(21) == BigNat(10946));
}

TEST_CASE("fast doubling fixtures") {
  CHECK(fib_exact(0).is_zero());
  CHECK(fib_exact(1) == BigNat(1));
  CHECK(fib_exact(2) == BigNat(1));
  CHECK(fib_exact(21) == BigNat(10946));
  std::string f300 = fib_exact(300).to_decimal();
  CHECK(f300.size() >= 19);
  CHECK(f300.substr(f300.size() - 19) == "9096499764990979600");
  CHECK(fib_exact(4096) == fib_iter_exact(4096));
}

TEST_CASE("recurrence holds for every index up to 10^4") {
  BigNat prev2 = fib_exact(0);
  BigNat prev1 = fib_exact(1);
  for (FibIndex n = 2; n <= 10'000; ++n) {
    BigNat cur = fib_exact(n);
    CHECK(cur == prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
}

TEST_CASE("fast doubling equals the iterative oracle at random indices") {
  auto rng = test_rng(201);
  for (int i = 0; i < 200; ++i) {
    FibIndex n = rand_in(rng, 0, 10'000);
    CAPTURE(n);
    CHECK(fib_exact(n) == fib_iter_exact(n));
  }
}

TEST_CASE("fib_mod fixtures") {
  CHECK(fib_mod(0, Modulus(7)) == 0);
  CHECK(fib_mod(7, Modulus(10)) == 3);
  CHECK(fib_mod(21, Modulus(10)) == 6);
}

TEST_CASE("fib_mod equals reduced exact values at random points") {
  auto rng = test_rng(202);
  for (int i = 0; i < 200; ++i) {
    FibIndex n = rand_in(rng, 0, 10'000);
    std::uint64_t m = rand_in(rng, 2, 1'000'000);
    CAPTURE(n);
    CAPTURE(m);
    CHECK(fib_mod(n, Modulus(m)) == fib_exact(n).mod_u64(m));
  }
}

TEST_CASE("modulus bounds") {
  CHECK_THROWS_AS(Modulus(0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(1), std::invalid_argument);
  CHECK_THROWS_AS(Modulus(1'000'000'000'001ull), std::invalid_argument);
  CHECK(Modulus(2).value() == 2);
  CHECK(Modulus(1'000'000'000'000ull).value() == 1'000'000'000'000ull);
  // Residues near the ceiling still step without overflow.
  Modulus top(1'000'000'000'000ull);
  ResidueStream stream(top, 100);
  ResiduePair p = stream.current();
  CHECK(p.stepped().b == (p.a + p.b) % top.value());
}

TEST_CASE("residue stream fixtures") {
  ResidueStream decimal(Modulus(10), 0);
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 6; ++i) first.push_back(decimal.next().a);
  CHECK(first == std::vector<std::uint64_t>{0, 1, 1, 2, 3, 5});

  ResidueStream parity(Modulus(2), 0);
  std::vector<std::uint64_t> bits;
  for (int i = 0; i < 6; ++i) bits.push_back(parity.next().a);
  CHECK(bits == std::vector<std::uint64_t>{0, 1, 1, 0, 1, 1});
}

TEST_CASE("stream seeded at 1500 mod 1000 wraps to the start of the period") {
  // Direct iteration to index 1500 as the oracle.
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < 1500; ++i) {
    std::uint64_t next = (a + b) % 1000;
    a = b;
    b = next;
  }
  CHECK(a == 0);
  CHECK(b == 1);
  ResidueStream stream(Modulus(1000), 1500);
  CHECK(stream.current().a == a);
  CHECK(stream.current().b == b);
}

TEST_CASE("stream seed matches fib_mod at random starts") {
  auto rng = test_rng(203);
  for (int i = 0; i < 50; ++i) {
    std::uint64_t m = rand_in(rng, 2, 1'000'000);
    FibIndex start = rand_in(rng, 0, 100'000);
    ResidueStream stream(Modulus(m), start);
    ResiduePair p = stream.current();
    CHECK(p.index == start);
    CHECK(p.a == fib_mod(start, Modulus(m)));
    CHECK(p.b == fib_mod(start + 1, Modulus(m)));
  }
}

TEST_CASE("stepping advances by the recurrence") {
  auto rng = test_rng(204);
  for (int i = 0; i < 50; ++i) {
    std::uint64_t m = rand_in(rng, 2, 1'000'000'000'000ull);
    FibIndex start = rand_in(rng, 0, 10'000);
    ResidueStream stream(Modulus(m), start);
    ResiduePair p = stream.next();
    ResiduePair q = stream.current();
    CHECK(q.index == p.index + 1);
    CHECK(q.a == p.b);
    CHECK(q.b == (p.a + p.b) % m);
  }
}

TEST_CASE("sum of squares telescopes to F_n * F_n+1") {
  BigNat a(1);  // F_1
  BigNat b(1);  // F_2
  BigNat acc;
  for (FibIndex n = 1; n <= 1000; ++n) {
    acc += a * a;
    CHECK(acc == a * b);
    BigNat next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
}

}  // TEST_SUITE
