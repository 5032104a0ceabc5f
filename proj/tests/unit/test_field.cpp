#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "ecdlp/error.hpp"
#include "ecdlp/field.hpp"
#include "ecdlp/random.hpp"
#include "oracles.hpp"

using namespace ecdlp;

namespace {
const PrimeModulus F17(17);
FieldElement e(u64 v) { return {F17, v}; }
}  // namespace

TEST_CASE("addition") {
  CHECK(e(3) + e(15) == e(1));
  CHECK((e(0) + e(9)) == e(9));
  for (u64 a = 0; a < 17; ++a) CHECK((e(a) + e(17 - a)).is_zero());
}

TEST_CASE("multiplication") {
  CHECK(e(4) * e(13) == e(1));
  for (u64 b = 0; b < 17; ++b) {
    CHECK(e(1) * e(b) == e(b));
    CHECK((e(0) * e(b)).is_zero());
  }
}

TEST_CASE("inverse") {
  CHECK(e(1).inverse() == e(1));
  CHECK(e(4).inverse() == e(13));
  CHECK(inv(e(4)).residue() == *oracle::inverse_euclid(4, 17));
  CHECK_THROWS_AS(e(0).inverse(), ZeroInversion);
  CHECK_THROWS_AS(e(5) / e(0), ZeroInversion);
}

TEST_CASE("mixed moduli are rejected") {
  FieldElement a(PrimeModulus(17), 3), b(PrimeModulus(19), 3);
  CHECK_THROWS_AS(a + b, ModulusMismatch);
  CHECK_THROWS_AS(a * b, ModulusMismatch);
  CHECK_THROWS_AS(a - b, ModulusMismatch);
}

TEST_CASE("prime modulus validation") {
  CHECK_THROWS_AS(PrimeModulus(0), ValidationError);
  CHECK_THROWS_AS(PrimeModulus(1), ValidationError);
  CHECK_THROWS_AS(PrimeModulus(21), ValidationError);
  CHECK_THROWS_AS(PrimeModulus(561), ValidationError);  // Carmichael
  CHECK(PrimeModulus(2).value() == 2);
  CHECK(PrimeModulus(18446744073709551557ULL).value() == 18446744073709551557ULL);  // 2^64 - 59
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("primality agrees with trial division below 20000") {
  for (u64 n = 0; n < 20000; ++n) CHECK_MESSAGE(is_prime(n) == oracle::is_prime_trial(n), n);
}

TEST_CASE("inverse agrees with scan oracle over F_97") {
  const PrimeModulus q(97);
  for (u64 a = 1; a < 97; ++a) CHECK(FieldElement(q, a).inverse().residue() == *oracle::inverse_by_scan(a, 97));
}

TEST_CASE("field axioms on random triples") {
  constexpr std::array<u64, 5> moduli = {17, 911, 2147483647ULL, 2305843009213693951ULL, 18446744073709551557ULL};
  Rng rng(2024);
  for (u64 qv : moduli) {
    const PrimeModulus q(qv);
    for (int t = 0; t < 1000; ++t) {
      FieldElement a(q, rng.uniform(0, qv)), b(q, rng.uniform(0, qv)), c(q, rng.uniform(0, qv));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a - b) + b == a);
      for (const FieldElement& r : {a + b, a * b, a - b, -a}) CHECK(r.residue() < qv);
      if (!a.is_zero()) {
        CHECK(a.inverse().inverse() == a);
        CHECK(a * a.inverse() == FieldElement::one(q));
      }
    }
  }
}

TEST_CASE("signed construction and square roots") {
  CHECK(FieldElement::from_signed(F17, -1) == e(16));
  CHECK(FieldElement::from_signed(F17, -35) == e(16));
  CHECK(FieldElement::from_signed(F17, INT64_MIN).residue() < 17);
  for (u64 qv : {17ULL, 911ULL, 97ULL, 65537ULL}) {  // covers q = 1 and 3 mod 4
    const PrimeModulus q(qv);
    for (u64 a = 0; a < std::min<u64>(qv, 2000); ++a) {
      FieldElement x(q, a);
      auto r = x.sqrt();
      bool square = false;
      for (u64 y = 0; y < qv && !square; ++y) square = oracle::mulmod(y, y, qv) == a;
      REQUIRE(r.has_value() == square);
      if (r) CHECK(*r * *r == x);
    }
  }
}
