#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ecdlp/error.hpp"
#include "ecdlp/fixtures.hpp"
#include "ecdlp/random.hpp"
#include "ecdlp/veronese.hpp"
#include "oracles.hpp"

using namespace ecdlp;

namespace {
std::vector<u64> residues(const MonomialRow& row) {
  std::vector<u64> out;
  for (const auto& v : row) out.push_back(v.residue());
  return out;
}
}  // namespace

TEST_CASE("basis ordering") {
  MonomialBasis b1(1);
  CHECK(std::vector<Monomial>(b1.exponents().begin(), b1.exponents().end()) ==
        std::vector<Monomial>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  MonomialBasis b2(2);
  CHECK(std::vector<Monomial>(b2.exponents().begin(), b2.exponents().end()) ==
        std::vector<Monomial>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  CHECK(MonomialBasis(3).size() == 10);
  for (unsigned n = 1; n <= 8; ++n) {
    MonomialBasis b(n);
    CHECK(b.size() == oracle::binomial_by_pascal(n + 2, 2));
    std::set<std::tuple<unsigned, unsigned, unsigned>> seen;
    for (const Monomial& m : b.exponents()) {
      CHECK(m.x + m.y + m.z == n);
      seen.insert({m.x, m.y, m.z});
    }
    CHECK(seen.size() == b.size());
    // Strictly descending in (x, y) lexicographic order.
    for (std::size_t i = 1; i < b.size(); ++i)
      CHECK(std::make_pair(b[i - 1].x, b[i - 1].y) > std::make_pair(b[i].x, b[i].y));
  }
  CHECK_THROWS_AS(MonomialBasis(0), ValidationError);
}

TEST_CASE("row evaluation examples") {
  const PrimeModulus q(17);
  // (3 : 4 : 1) need not be on a curve for the raw monomial map.
  FieldElement x(q, 3), y(q, 4), z(q, 1);
  CHECK(residues(evaluate_monomials(MonomialBasis(1), x, y, z)) == std::vector<u64>{3, 4, 1});
  CHECK(residues(evaluate_monomials(MonomialBasis(2), x, y, z)) == std::vector<u64>{9, 12, 3, 16, 4, 1});
  Curve c(q, 2, 2);
  CHECK(residues(evaluate_row(MonomialBasis(2), c.identity())) == std::vector<u64>{0, 0, 0, 1, 0, 0});
  Point p = c.point(5, 1);
  std::vector<u64> buf(6);
  evaluate_row_into(MonomialBasis(2), p, buf);
  CHECK(buf == residues(evaluate_row(MonomialBasis(2), p)));
}

TEST_CASE("homogeneity under projective rescaling") {
  GroupSpec g = medium_fixture();
  const PrimeModulus q = g.curve().field();
  Rng rng(3);
  for (unsigned n = 1; n <= 5; ++n) {
    MonomialBasis b(n);
    for (int t = 0; t < 50; ++t) {
      Point p = scalar_mul(g, rng.uniform(1, 907));
      FieldElement lam(q, rng.uniform(1, q.value()));
      auto base = evaluate_row(b, p);
      auto scaled = evaluate_monomials(b, lam * p.x(), lam * p.y(), lam * p.z());
      for (std::size_t i = 0; i < b.size(); ++i) CHECK(scaled[i] == base[i] * lam.pow(n));
    }
  }
}

TEST_CASE("row dot coefficients vanishes iff the polynomial vanishes at the point") {
  GroupSpec g = small_fixture();
  const u64 q = 17;
  Rng rng(8);
  for (unsigned n = 1; n <= 3; ++n) {
    MonomialBasis b(n);
    for (int t = 0; t < 300; ++t) {
      Point p = scalar_mul(g, rng.uniform(0, 19));
      std::vector<u64> coeffs(b.size());
      oracle::Polynomial poly;
      for (std::size_t i = 0; i < b.size(); ++i) {
        // Sparse coefficients make vanishing common enough to exercise both sides.
        coeffs[i] = rng.uniform(0, 3) == 0 ? rng.uniform(0, q) : 0;
        poly[{b[i].x, b[i].y, b[i].z}] = coeffs[i];
      }
      auto row = evaluate_row(b, p);
      u64 dot = 0;
      for (std::size_t i = 0; i < b.size(); ++i) dot = (dot + row[i].residue() * coeffs[i]) % q;
      CHECK((dot == 0) == (oracle::evaluate(poly, p.x().residue(), p.y().residue(), p.z().residue(), q) == 0));
    }
  }
}

TEST_CASE("distinct points give distinct linear rows") {
  GroupSpec g = medium_fixture();
  std::set<std::vector<u64>> rows;
  for (u64 r = 0; r < 907; ++r) rows.insert(residues(evaluate_row(MonomialBasis(1), scalar_mul(g, r))));
  CHECK(rows.size() == 907);
}
