#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecdlp/error.hpp"
#include "ecdlp/linalg.hpp"
#include "ecdlp/random.hpp"

using namespace ecdlp;

namespace {
const PrimeModulus F5(5);

MatrixFq random_matrix(PrimeModulus q, std::size_t r, std::size_t c, Rng& rng, u64 zero_bias = 0) {
  MatrixFq m(q, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m.set(i, j, rng.uniform(0, zero_bias + 1) == 0 ? rng.uniform(0, q.value()) : 0);
  return m;
}

bool all_zero(std::span<const u64> v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}
}  // namespace

TEST_CASE("rref examples") {
  auto id = MatrixFq::identity(F5, 4);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 4);

  auto m = MatrixFq::from_rows(F5, {{1, 2}, {2, 4}});
  r = rref(m);
  CHECK(r.reduced == MatrixFq::from_rows(F5, {{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});

  MatrixFq zero(F5, 3, 4);
  r = rref(zero);
  CHECK(r.reduced == zero);
  CHECK(r.rank == 0);
}

TEST_CASE("kernel examples") {
  CHECK(left_kernel(MatrixFq::identity(F5, 3)).dimension() == 0);

  auto m = MatrixFq::from_rows(F5, {{1, 2}, {2, 4}});
  KernelBasis k = left_kernel(m);
  REQUIRE(k.dimension() == 1);
  const std::vector<u64> expected{3, 1};
  CHECK(k.contains(expected));
  CHECK(all_zero(left_multiply(k.vector(0), m)));
  // Canonical scaling: leading entry 1.
  CHECK(k.vector(0)[0] == 1);

  CHECK(right_kernel(MatrixFq(F5, 2, 5)).dimension() == 5);
  CHECK(right_kernel(MatrixFq::identity(F5, 3)).dimension() == 0);
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
  Rng rng(99);
  for (u64 qv : {2ULL, 5ULL, 17ULL, 911ULL}) {
    const PrimeModulus q(qv);
    for (int t = 0; t < 300; ++t) {
      const std::size_t r = 1 + rng.uniform(0, 8), c = 1 + rng.uniform(0, 8);
      MatrixFq m = random_matrix(q, r, c, rng, t % 3);
      const std::size_t rk = rank(m);
      KernelBasis left = left_kernel(m), right = right_kernel(m);
      CHECK(left.dimension() + rk == r);
      CHECK(right.dimension() + rk == c);
      CHECK(rank(left.matrix()) == left.dimension());
      for (std::size_t i = 0; i < left.dimension(); ++i) CHECK(all_zero(left_multiply(left.vector(i), m)));
      for (std::size_t i = 0; i < right.dimension(); ++i) CHECK(all_zero(right_multiply(m, right.vector(i))));
      // The canonical form is independent of how the space was presented.
      if (left.dimension() > 0) {
        MatrixFq shuffled = left.matrix();
        for (std::size_t i = 1; i < shuffled.rows(); ++i) shuffled.subtract_row_multiple(i, 0, rng.uniform(0, qv));
        shuffled.swap_rows(0, shuffled.rows() - 1);
        CHECK(KernelBasis(shuffled) == left);
      }
    }
  }
}

TEST_CASE("eliminate_block examples") {
  auto diag = MatrixFq::from_rows(F5, {{2, 0, 1, 3}, {0, 4, 2, 2}});
  auto out = eliminate_block(diag, {0, 2}, BlockStage::diagonal);
  CHECK(out.matrix == diag);
  CHECK_FALSE(out.singular);
  CHECK(eliminate_block(diag, {0, 2}, BlockStage::lower_triangular).matrix == diag);

  auto k = MatrixFq::from_rows(F5, {{1, 1, 1, 0}, {0, 1, 1, 1}});
  out = eliminate_block(k, {0, 2}, BlockStage::diagonal);
  CHECK(out.matrix == MatrixFq::from_rows(F5, {{1, 0, 0, 4}, {0, 1, 1, 1}}));
  CHECK(same_row_space(out.matrix, k));

  CHECK_THROWS_AS(eliminate_block(k, {0, 3}, BlockStage::diagonal), ValidationError);
  CHECK_THROWS_AS(eliminate_block(k, {3, 2}, BlockStage::diagonal), ValidationError);
}

TEST_CASE("eliminate_block shapes, span preservation and singular blocks") {
  Rng rng(123);
  for (u64 qv : {3ULL, 7ULL, 911ULL}) {
    const PrimeModulus q(qv);
    for (int t = 0; t < 400; ++t) {
      const std::size_t w = 1 + rng.uniform(0, 6);
      const std::size_t cols = w + rng.uniform(0, 7);
      const std::size_t first = rng.uniform(0, cols - w + 1);
      MatrixFq basis = random_matrix(q, w, cols, rng, t % 4);
      for (BlockStage stage : {BlockStage::lower_triangular, BlockStage::diagonal}) {
        BlockElimination e = eliminate_block(basis, {first, w}, stage);
        CHECK(same_row_space(e.matrix, basis));
        CHECK(e.column_order.size() == w);
        const bool singular = rank(basis.select_columns(e.column_order)) < w;
        CHECK(e.singular == singular);
        if (singular) continue;
        for (std::size_t r = 0; r < w; ++r) {
          for (std::size_t pos = 0; pos < w; ++pos) {
            const u64 v = e.matrix(r, e.column_order[pos]);
            if (pos == r) CHECK(v != 0);
            if (stage == BlockStage::lower_triangular && pos > r) CHECK(v == 0);
            if (stage == BlockStage::diagonal && pos != r) CHECK(v == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("singular block still clears what it can") {
  const PrimeModulus q(7);
  auto k = MatrixFq::from_rows(q, {{1, 2, 3, 1}, {2, 4, 5, 6}});
  auto e = eliminate_block(k, {0, 2}, BlockStage::diagonal);
  CHECK(e.singular);
  CHECK(same_row_space(e.matrix, k));
  // The dependent row is zero throughout the block.
  CHECK(e.matrix(1, 0) == 0);
  CHECK(e.matrix(1, 1) == 0);
}

TEST_CASE("matrix dump format") {
  auto m = MatrixFq::from_rows(PrimeModulus(17), {{1, 0, 16}, {3, 4, 5}});
  CHECK(dump_matrix(m) == "1 0 16\n3 4 5\n");
  CHECK(parse_matrix_dump(PrimeModulus(17), dump_matrix(m)) == m);
  CHECK_THROWS_AS(parse_matrix_dump(PrimeModulus(17), "1 2\n3\n"), ValidationError);
  CHECK_THROWS_AS(parse_matrix_dump(PrimeModulus(17), "1 a\n"), ValidationError);
}
