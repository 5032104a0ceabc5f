#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ecdlp/curve.hpp"
#include "ecdlp/error.hpp"
#include "ecdlp/fixtures.hpp"
#include "ecdlp/linalg.hpp"
#include "ecdlp/random.hpp"
#include "ecdlp/veronese.hpp"
#include "oracles.hpp"

using namespace ecdlp;

namespace {
const Curve kCurve17(PrimeModulus(17), 2, 2);

oracle::AffinePoint to_oracle(const Point& p) {
  if (p.is_identity()) return {true, 0, 0};
  return {false, p.x().residue(), p.y().residue()};
}
}  // namespace

TEST_CASE("group law examples") {
  Point a = kCurve17.point(5, 1);
  CHECK(kCurve17.add(a, kCurve17.identity()) == a);
  CHECK(kCurve17.add(kCurve17.identity(), a) == a);
  CHECK(kCurve17.add(a, kCurve17.negate(a)).is_identity());
  CHECK(kCurve17.negate(a) == kCurve17.point(5, 16));
  CHECK(kCurve17.add(a, a) == kCurve17.point(6, 3));
  // The independent doubling formula agrees.
  CHECK(to_oracle(kCurve17.add(a, a)) == oracle::add_points(17, 2, {false, 5, 1}, {false, 5, 1}));
}

TEST_CASE("addition matches the textbook oracle on every pair of F_17 points") {
  auto pts = oracle::enumerate_points(17, 2, 2);
  pts.push_back({true, 0, 0});
  for (auto p1 : pts) {
    for (auto p2 : pts) {
      Point a = p1.inf ? kCurve17.identity() : kCurve17.point(p1.x, p1.y);
      Point b = p2.inf ? kCurve17.identity() : kCurve17.point(p2.x, p2.y);
      CHECK(to_oracle(kCurve17.add(a, b)) == oracle::add_points(17, 2, p1, p2));
    }
  }
}

TEST_CASE("scalar multiplication") {
  GroupSpec g = small_fixture();
  CHECK(scalar_mul(g, 0).is_identity());
  CHECK(scalar_mul(g, 1) == g.generator());
  CHECK(scalar_mul(g, 19).is_identity());
  Rng rng(5);
  GroupSpec m = medium_fixture();
  const u64 p = m.order().value();
  for (int t = 0; t < 1000; ++t) {
    u64 r1 = rng.uniform(0, p), r2 = rng.uniform(0, p);
    CHECK(m.curve().add(scalar_mul(m, r1), scalar_mul(m, r2)) == scalar_mul(m, (r1 + r2) % p));
  }
}

TEST_CASE("group axioms on random points") {
  GroupSpec g = medium_fixture();
  const Curve& c = g.curve();
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    Point a = scalar_mul(g, rng.uniform(0, 907));
    Point b = scalar_mul(g, rng.uniform(0, 907));
    Point d = scalar_mul(g, rng.uniform(0, 907));
    CHECK(c.add(c.add(a, b), d) == c.add(a, c.add(b, d)));
    CHECK(c.add(a, b) == c.add(b, a));
    CHECK(c.add(a, c.identity()) == a);
    CHECK(c.add(a, c.negate(a)).is_identity());
    CHECK(c.contains(c.add(a, b)));
  }
}

TEST_CASE("point counting") {
  CHECK(group_order(kCurve17) == 19);
  CHECK(group_order(kCurve17) == oracle::enumerate_points(17, 2, 2).size() + 1);
  CHECK(group_order(Curve(PrimeModulus(5), 1, 0)) == 4);
  CHECK(group_order(Curve(PrimeModulus(5), 1, 0)) == oracle::enumerate_points(5, 1, 0).size() + 1);
  CHECK(group_order(Curve(PrimeModulus(911), 1, 113)) == 907);
  for (u64 q : {7ULL, 11ULL, 13ULL, 29ULL}) {
    for (u64 a = 0; a < q; ++a) {
      for (u64 b = 0; b < q; ++b) {
        if ((4 * a * a * a + 27 * b * b) % q == 0) continue;
        u64 n = group_order(Curve(PrimeModulus(q), a, b));
        CHECK(n == oracle::enumerate_points(q, a, b).size() + 1);
        CHECK(std::abs(static_cast<double>(n) - static_cast<double>(q + 1)) <= 2.0 * std::sqrt(static_cast<double>(q)));
      }
    }
  }
  CHECK_THROWS_AS(group_order(kCurve17, 16), BudgetExceeded);
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(Curve(PrimeModulus(17), 0, 0), ValidationError);
  CHECK_THROWS_AS(Curve(PrimeModulus(3), 1, 1), ValidationError);
  CHECK_THROWS_AS(kCurve17.point(5, 2), ValidationError);
  CHECK_THROWS_AS(GroupSpec(kCurve17, kCurve17.identity(), 19), ValidationError);
  CHECK_THROWS_AS(GroupSpec(kCurve17, kCurve17.point(5, 1), 17), ValidationError);
  CHECK_THROWS_AS(GroupSpec(kCurve17, kCurve17.point(5, 1), 20), ValidationError);
}

TEST_CASE("projective normalization") {
  const PrimeModulus q = kCurve17.field();
  FieldElement lam(q, 7);
  Point p = kCurve17.from_projective(FieldElement(q, 5) * lam, FieldElement(q, 1) * lam, lam);
  CHECK(p == kCurve17.point(5, 1));
  CHECK(p.z().residue() == 1);
  CHECK(kCurve17.from_projective(FieldElement(q, 0), lam, FieldElement(q, 0)).is_identity());
  CHECK_THROWS_AS(kCurve17.from_projective(lam, lam, FieldElement(q, 0)), ValidationError);
}

TEST_CASE("prime-order curve search") {
  GroupSpec g = find_prime_order_curve(PrimeModulus(17), 19, 19);
  CHECK(g.order().value() == 19);
  CHECK(g.curve().a().residue() == 2);
  CHECK(g.curve().b().residue() == 2);
  CHECK_THROWS_AS(find_prime_order_curve(PrimeModulus(17), 4, 4), ValidationError);
  GroupSpec m = find_prime_order_curve(PrimeModulus(911), 907, 907);
  CHECK(format_curve(m.curve()) == "911 1 113");
  CHECK(m.generator() == medium_fixture().generator());
  GroupSpec wide = find_prime_order_curve(PrimeModulus(997), 850, 1000);
  CHECK(is_prime(wide.order().value()));
  CHECK(group_order(wide.curve()) == wide.order().value());
}

TEST_CASE("text formats") {
  Curve c = parse_curve("17 2 2");
  CHECK(c == kCurve17);
  CHECK(parse_point(c, " 5 1 ") == c.point(5, 1));
  CHECK(parse_point(c, "O").is_identity());
  CHECK(format_point(c.identity()) == "O");
  CHECK(format_point(c.point(6, 3)) == "6 3");
  CHECK_THROWS_AS(parse_point(c, "5"), ValidationError);
  CHECK_THROWS_AS(parse_point(c, "5 x"), ValidationError);
  CHECK_THROWS_AS(parse_curve("18 2 2"), ValidationError);
}

TEST_CASE("chord law: three distinct points are collinear iff they sum to O") {
  GroupSpec g = small_fixture();
  const Curve& c = g.curve();
  const MonomialBasis linear(1);
  std::vector<Point> pts;
  for (u64 r = 1; r < 19; ++r) pts.push_back(scalar_mul(g, r));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        MatrixFq m(c.field(), 3, 3);
        evaluate_row_into(linear, pts[i], m.row(0));
        evaluate_row_into(linear, pts[j], m.row(1));
        evaluate_row_into(linear, pts[k], m.row(2));
        bool collinear = rank(m) < 3;
        CHECK(collinear == c.add(c.add(pts[i], pts[j]), pts[k]).is_identity());
      }
    }
  }
}
