#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecdlp/dlp_oracles.hpp"
#include "ecdlp/error.hpp"
#include "ecdlp/fixtures.hpp"
#include "ecdlp/random.hpp"

using namespace ecdlp;

TEST_CASE("trivial logarithms") {
  for (const GroupSpec& g : {small_fixture(), medium_fixture()}) {
    const u64 p = g.order().value();
    CHECK(solve_bsgs(g, g.curve().identity()) == 0);
    CHECK(solve_bsgs(g, g.generator()) == 1);
    CHECK(solve_exhaustive_dlp(g, scalar_mul(g, p - 1)) == p - 1);
    CHECK(solve_bsgs(g, scalar_mul(g, p - 1)) == p - 1);
  }
}

TEST_CASE("planted logarithms agree across both oracles") {
  Rng rng(31);
  for (const GroupSpec& g : {small_fixture(), medium_fixture()}) {
    const u64 p = g.order().value();
    for (int t = 0; t < 100; ++t) {
      const u64 m = rng.uniform(0, p);
      const Point q = scalar_mul(g, m);
      CHECK(solve_bsgs(g, q) == m);
      CHECK(solve_exhaustive_dlp(g, q) == m);
    }
  }
}

TEST_CASE("oracle guards") {
  GroupSpec g = medium_fixture();
  CHECK_THROWS_AS(solve_bsgs(g, g.generator(), 100), BudgetExceeded);
  CHECK_THROWS_AS(solve_exhaustive_dlp(g, g.generator(), 100), BudgetExceeded);
  GroupSpec small = small_fixture();
  Curve other(PrimeModulus(17), 1, 1);
  CHECK_THROWS_AS(solve_bsgs(small, other.point(0, 1)), ValidationError);
}
