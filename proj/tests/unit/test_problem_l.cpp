#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecdlp/error.hpp"
#include "ecdlp/problem_l.hpp"
#include "ecdlp/random.hpp"
#include "oracles.hpp"

using namespace ecdlp;

namespace {

std::vector<std::vector<u64>> to_rows(const MatrixFq& m) {
  std::vector<std::vector<u64>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.emplace_back(m.row(r).begin(), m.row(r).end());
  return out;
}

MatrixFq random_invertible(PrimeModulus q, std::size_t n, Rng& rng) {
  while (true) {
    MatrixFq t(q, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.set(i, j, rng.uniform(0, q.value()));
    if (rank(t) == n) return t;
  }
}

MatrixFq multiply(const MatrixFq& a, const MatrixFq& b) {
  MatrixFq out(a.modulus(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out.set_row(i, left_multiply(a.row(i), b));
  return out;
}

// l independent vectors in F_q^n, the first with exactly l zeros, mixed by a random T.
MatrixFq planted_basis(PrimeModulus q, std::size_t n, std::size_t l, Rng& rng) {
  while (true) {
    MatrixFq b(q, l, n);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = i;
    for (std::size_t i = 0; i < l; ++i) std::swap(pos[i], pos[i + rng.uniform(0, n - i)]);
    for (std::size_t j = 0; j < n; ++j) b.set(0, j, rng.uniform(1, q.value()));
    for (std::size_t i = 0; i < l; ++i) b.set(0, pos[i], 0);
    for (std::size_t r = 1; r < l; ++r)
      for (std::size_t j = 0; j < n; ++j) b.set(r, j, rng.uniform(0, q.value()));
    if (rank(b) == l) return multiply(random_invertible(q, l, rng), b);
  }
}

}  // namespace

TEST_CASE("multiple elimination examples") {
  const PrimeModulus q(5);
  ProblemLInstance inst{MatrixFq::from_rows(q, {{1, 0, 0, 0}, {0, 1, 0, 0}}), 2};
  Alg2Trace t = solve_alg2_traced(inst);
  REQUIRE(t.solution);
  CHECK(t.checkpoint == 1);
  CHECK(t.solution->vector == std::vector<u64>{1, 0, 0, 0});
  CHECK(t.solution->zero_positions == std::vector<std::size_t>{1, 2, 3});
  CHECK(verify_solution(inst, *t.solution));

  // Dimension other than l is outside what the method handles.
  CHECK_FALSE(solve_alg2({MatrixFq::from_rows(q, {{1, 1, 1, 1}}), 2}));
}

TEST_CASE("exhaustive examples") {
  const PrimeModulus q(5);
  ProblemLInstance inst{MatrixFq::from_rows(q, {{1, 1, 0, 0}, {0, 0, 1, 1}}), 2};
  auto sol = solve_exhaustive(inst);
  REQUIRE(sol);
  CHECK(verify_solution(inst, *sol));
  const auto& v = sol->vector;
  const bool first = v[0] != 0 && v[0] == v[1] && v[2] == 0 && v[3] == 0;
  const bool second = v[2] != 0 && v[2] == v[3] && v[0] == 0 && v[1] == 0;
  CHECK((first || second));

  std::size_t visits = 0;
  enumerate_zero_patterns(inst, [&](const ZeroPatternSolution& s) {
    CHECK(verify_solution(inst, s));
    ++visits;
    return false;
  });
  CHECK(visits == 2);

  // Every nonzero multiple of (1, 2, 3, 4) has full support.
  CHECK_FALSE(solve_exhaustive({MatrixFq::from_rows(q, {{1, 2, 3, 4}}), 1}));
}

TEST_CASE("verify_solution rejects bad answers") {
  const PrimeModulus q(7);
  ProblemLInstance inst{MatrixFq::from_rows(q, {{1, 0, 2, 0}, {0, 1, 3, 0}}), 2};
  CHECK(verify_solution(inst, make_solution({1, 0, 2, 0})));
  CHECK_FALSE(verify_solution(inst, make_solution({0, 0, 0, 0})));
  CHECK_FALSE(verify_solution(inst, make_solution({1, 1, 5, 0})));  // one zero only
  CHECK_FALSE(verify_solution(inst, make_solution({0, 0, 0, 1})));  // outside the span
  ZeroPatternSolution lying = make_solution({1, 0, 2, 0});
  lying.zero_positions = {0, 1, 3};
  CHECK_FALSE(verify_solution(inst, lying));
}

TEST_CASE("exhaustive solver agrees with full-span enumeration") {
  Rng rng(2024);
  std::size_t solvable = 0, unsolvable = 0;
  for (u64 qv : {2ULL, 3ULL, 5ULL, 7ULL}) {
    const PrimeModulus q(qv);
    for (int t = 0; t < 250; ++t) {
      const std::size_t n = 2 + rng.uniform(0, 5);
      const std::size_t dim = 1 + rng.uniform(0, std::min<std::size_t>(3, n - 1));
      const std::size_t zeros = 1 + rng.uniform(0, n - 1);
      MatrixFq b(q, dim, n);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < n; ++j) b.set(i, j, rng.uniform(0, qv));
      KernelBasis kb(b);
      if (kb.dimension() == 0) continue;
      ProblemLInstance inst = make_instance(kb, zeros);
      auto truth = oracle::span_vector_with_zeros(to_rows(inst.basis), qv, zeros);
      auto found = solve_exhaustive(inst);
      CHECK(found.has_value() == truth.has_value());
      if (found) CHECK(verify_solution(inst, *found));
      (truth ? solvable : unsolvable)++;
    }
  }
  CHECK(solvable > 50);
  CHECK(unsolvable > 50);
}

TEST_CASE("planted instances: soundness and dominance") {
  Rng rng(77);
  std::size_t alg2_found = 0;
  for (u64 qv : {5ULL, 101ULL, 907ULL}) {
    const PrimeModulus q(qv);
    for (int t = 0; t < 200; ++t) {
      const std::size_t l = 2 + rng.uniform(0, 5);
      const std::size_t n = l + 1 + rng.uniform(0, l + 2);
      ProblemLInstance inst{planted_basis(q, n, l, rng), l};
      auto ex = solve_exhaustive(inst);
      REQUIRE(ex);
      CHECK(verify_solution(inst, *ex));
      Alg2Trace tr = solve_alg2_traced(inst);
      if (tr.solution) {
        ++alg2_found;
        CHECK(verify_solution(inst, *tr.solution));
        CHECK(tr.checkpoint >= 1);
        CHECK(tr.checkpoint <= 4);
      } else {
        CHECK(tr.checkpoint == 0);
      }
    }
  }
  CHECK(alg2_found > 0);
}

TEST_CASE("enumeration budget") {
  const PrimeModulus q(101);
  MatrixFq b(q, 20, 40);
  for (std::size_t i = 0; i < 20; ++i) b.set(i, i, 1);
  CHECK_THROWS_AS(solve_exhaustive({b, 20}), BudgetExceeded);
  CHECK_THROWS_AS(solve_exhaustive({b, 20}, 1000), BudgetExceeded);
}

TEST_CASE("conditional success estimate") {
  auto e = conditional_success_estimate(2, 6, 907);
  CHECK(e.numerator == 36);
  CHECK(e.denominator == 924);
  CHECK(e.value == doctest::Approx(36.0 / 924.0));
  e = conditional_success_estimate(1, 3, 19);
  CHECK(e.numerator == 9);
  CHECK(e.denominator == 20);
  CHECK(e.value == doctest::Approx(0.45));
  e = conditional_success_estimate(2, 1, 907);
  CHECK(e.numerator == 1);
  CHECK(e.denominator == 7);
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned l = 1; l <= 3 * n; ++l) {
      e = conditional_success_estimate(n, l, 1009);
      CHECK(e.value >= 0.0);
      CHECK(e.value <= 1.0);
    }
  }
}

TEST_CASE("solver names") {
  for (SolverKind k : {SolverKind::alg2, SolverKind::exhaustive, SolverKind::alg2_then_exhaustive})
    CHECK(parse_solver_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_solver_kind("gauss"), ValidationError);
}
