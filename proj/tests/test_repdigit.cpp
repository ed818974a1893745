#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "fibdig/pisano.hpp"
#include "fibdig/repdigit.hpp"
#include "testutil.hpp"

using namespace fibdig;

TEST_SUITE("repdigit") {

TEST_CASE("repdigit values") {
  CHECK(repdigit_value(6, 5, 10) == BigNat(66666));
  CHECK(repdigit_value(6, 1, 10) == BigNat(6));
  CHECK(repdigit_value(5, 2, 10) == BigNat(55));
  CHECK(repdigit_value(1, 3, 2) == BigNat(7));  // 111 in binary
  CHECK_THROWS_AS(repdigit_value(0, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(repdigit_value(10, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(repdigit_value(3, 0, 10), std::invalid_argument);
}

TEST_CASE("fibonacci membership by generation") {
  CHECK(fibonacci_index(BigNat(55)) == 10);
  CHECK(fibonacci_index(BigNat(10946)) == 21);
  CHECK(fibonacci_index(BigNat(4)) == std::nullopt);
  CHECK(fibonacci_index(BigNat(0)) == 0);
  CHECK(fibonacci_index(BigNat(1)) == 1);  // smallest matching index
  CHECK(fibonacci_index(BigNat(2)) == 3);
  CHECK(fibonacci_index(fib_exact(200)) == 200);
}

TEST_CASE("digit 6 is excluded modulo 2^5") {
  RepdigitProof proof = prove_repdigit_impossible(6, 2, 5, 10);
  CHECK(proof.modulus == 32);
  CHECK(proof.excluded_residue == 10);
  CHECK(proof.long_case_excluded);
  CHECK(proof.conclusive());
  REQUIRE(proof.short_cases.size() == 4);
  for (std::uint32_t len = 1; len <= 4; ++len) {
    const RepdigitShortCase& c = proof.short_cases[len - 1];
    CHECK(c.length == len);
    CHECK(c.value == repdigit_value(6, len, 10));
    CHECK(!c.fibonacci_index.has_value());
  }
}

TEST_CASE("digit 5 modulo 2^5 proves nothing but lists 5 and 55") {
  RepdigitProof proof = prove_repdigit_impossible(5, 2, 5, 10);
  // 55555 = 1736 * 32 + 3, and 3 is attained (it is F_4), so the long case
  // survives this modulus.
  CHECK(proof.excluded_residue == 3);
  CHECK(residue_set(Modulus(32)).contains(3));
  CHECK(!proof.conclusive());
  REQUIRE(proof.short_cases.size() == 4);
  CHECK(proof.short_cases[0].fibonacci_index == 5);    // 5
  CHECK(proof.short_cases[1].fibonacci_index == 10);   // 55
  CHECK(!proof.short_cases[2].fibonacci_index.has_value());
  CHECK(!proof.short_cases[3].fibonacci_index.has_value());
}

TEST_CASE("exponent 1 collapses to parity and proves nothing for 6") {
  RepdigitProof proof = prove_repdigit_impossible(6, 2, 1, 10);
  CHECK(proof.modulus == 2);
  CHECK(proof.excluded_residue == 0);
  CHECK(!proof.conclusive());  // even Fibonacci numbers exist
  CHECK(proof.short_cases.empty());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(prove_repdigit_impossible(6, 4, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(prove_repdigit_impossible(6, 3, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(prove_repdigit_impossible(6, 2, 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(prove_repdigit_impossible(6, 2, 40, 10),
                  std::invalid_argument);
}

TEST_CASE("long repdigits collapse to one residue class") {
  auto rng = test_rng(501);
  for (std::uint8_t d = 1; d <= 9; ++d) {
    RepdigitProof proof = prove_repdigit_impossible(d, 2, 5, 10);
    for (int i = 0; i < 10; ++i) {
      std::uint32_t len = static_cast<std::uint32_t>(rand_in(rng, 5, 105));
      CAPTURE(d);
      CAPTURE(len);
      CHECK(repdigit_value(d, len, 10).mod_u64(32) == proof.excluded_residue);
    }
  }
}

TEST_CASE("conclusive proofs agree with brute force up to 30 digits") {
  for (std::uint8_t d = 1; d <= 9; ++d) {
    RepdigitProof proof = prove_repdigit_impossible(d, 2, 5, 10);
    if (!proof.conclusive()) continue;
    std::vector<std::uint32_t> expected;
    for (const RepdigitShortCase& c : proof.short_cases) {
      if (c.fibonacci_index.has_value()) expected.push_back(c.length);
    }
    std::vector<std::uint32_t> found;
    for (std::uint32_t len = 1; len <= 30; ++len) {
      if (fibonacci_index(repdigit_value(d, len, 10)).has_value()) {
        found.push_back(len);
      }
    }
    CAPTURE(d);
    CHECK(found == expected);
  }
}

TEST_CASE("no conclusive proof finds a multi-digit repdigit beyond 55") {
  // 55 stays the only multi-digit Fibonacci repdigit any conclusive modulus
  // can admit; inconclusive digits are reported, not asserted.
  for (std::uint8_t d = 1; d <= 9; ++d) {
    RepdigitProof proof = prove_repdigit_impossible(d, 2, 5, 10);
    if (!proof.conclusive()) continue;
    for (const RepdigitShortCase& c : proof.short_cases) {
      if (c.length >= 2 && c.fibonacci_index.has_value()) {
        CHECK(c.value == BigNat(55));
      }
    }
  }
}

TEST_CASE("ascending search finds a conclusive modulus for 6") {
  std::optional<RepdigitProof> proof = find_repdigit_proof(6, 10);
  REQUIRE(proof.has_value());
  CHECK(proof->conclusive());
  // The smallest working power of 2 is 16: 6666 = 416*16 + 10 and the
  // residue 10 mod 16 is unattained.
  CHECK(proof->modulus == 16);
  CHECK(proof->excluded_residue == 10);
  CHECK(!residue_set(Modulus(16)).contains(10));
}

}  // TEST_SUITE
