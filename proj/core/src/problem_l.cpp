#include "ecdlp/problem_l.hpp"

#include <algorithm>
#include <string>

#include "ecdlp/analysis.hpp"
#include "ecdlp/error.hpp"

namespace ecdlp {

ProblemLInstance make_instance(const KernelBasis& basis, std::size_t required_zeros) {
  if (required_zeros == 0 || required_zeros > basis.ambient()) {
    throw ValidationError("required zero count must lie in [1, ambient dimension]");
  }
  return {basis.matrix(), required_zeros};
}

ZeroPatternSolution make_solution(std::vector<u64> vector) {
  ZeroPatternSolution s{std::move(vector), {}};
  for (std::size_t i = 0; i < s.vector.size(); ++i)
    if (s.vector[i] == 0) s.zero_positions.push_back(i);
  return s;
}

bool verify_solution(const ProblemLInstance& inst, const ZeroPatternSolution& sol) {
  if (sol.vector.size() != inst.ambient()) return false;
  if (sol.zero_positions.size() == sol.vector.size()) return false;
  if (sol.zero_positions.size() < inst.required_zeros) return false;
  for (std::size_t i = 0, z = 0; i < sol.vector.size(); ++i) {
    bool listed = z < sol.zero_positions.size() && sol.zero_positions[z] == i;
    if (listed != (sol.vector[i] == 0)) return false;
    if (listed) ++z;
  }
  return in_row_space(inst.basis, sol.vector);
}

namespace {

std::optional<ZeroPatternSolution> scan_rows(const MatrixFq& m, std::size_t required) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    auto zeros = static_cast<std::size_t>(std::count(row.begin(), row.end(), u64{0}));
    if (zeros >= required && zeros < row.size()) return make_solution({row.begin(), row.end()});
  }
  return std::nullopt;
}

}  // namespace

Alg2Trace solve_alg2_traced(const ProblemLInstance& inst) {
  Alg2Trace trace;
  const std::size_t l = inst.required_zeros;
  if (inst.dimension() != l || inst.ambient() < l) return trace;

  MatrixFq current = inst.basis;
  int checkpoint = 0;
  for (std::size_t block = 0; block < 2; ++block) {
    // Blocks are the first two disjoint l-column windows; a short second window is skipped.
    if ((block + 1) * l > inst.ambient()) break;
    const ColumnRange range{block * l, l};
    for (BlockStage stage : {BlockStage::lower_triangular, BlockStage::diagonal}) {
      ++checkpoint;
      BlockElimination step = eliminate_block(current, range, stage);
      trace.singular_block[block] = trace.singular_block[block] || step.singular;
      trace.column_swaps += step.column_swaps.size();
      current = std::move(step.matrix);
      if (auto found = scan_rows(current, l)) {
        trace.solution = std::move(found);
        trace.checkpoint = checkpoint;
        return trace;
      }
    }
  }
  return trace;
}

std::optional<ZeroPatternSolution> solve_alg2(const ProblemLInstance& inst) {
  return solve_alg2_traced(inst).solution;
}

namespace {

// Left null space of the dim x k block (basis restricted to columns `cols`),
// computed in place on a scratch buffer. Returns coefficient vectors c with
// sum_i c_i basis[i][cols] = 0.
std::vector<std::vector<u64>> block_left_null(const MatrixFq& basis, std::span<const std::size_t> cols,
                                              std::vector<u64>& scratch) {
  const std::size_t dim = basis.rows();
  const std::size_t k = cols.size();
  const u64 q = basis.modulus().value();
  // Work on [block | I_dim] row-reduced; zero block rows carry the null vectors.
  const std::size_t width = k + dim;
  scratch.assign(dim * width, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t j = 0; j < k; ++j) scratch[r * width + j] = basis(r, cols[j]);
    scratch[r * width + k + r] = 1;
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < k && pivot_row < dim; ++col) {
    std::size_t r = pivot_row;
    while (r < dim && scratch[r * width + col] == 0) ++r;
    if (r == dim) continue;
    if (r != pivot_row)
      for (std::size_t c = 0; c < width; ++c) std::swap(scratch[r * width + c], scratch[pivot_row * width + c]);
    const u64 pinv = *inv_mod(scratch[pivot_row * width + col], q);
    for (std::size_t other = pivot_row + 1; other < dim; ++other) {
      u64 f = scratch[other * width + col];
      if (f == 0) continue;
      f = mul_mod(f, pinv, q);
      for (std::size_t c = col; c < width; ++c) {
        u64 s = scratch[pivot_row * width + c];
        if (s) scratch[other * width + c] = sub_mod(scratch[other * width + c], mul_mod(f, s, q), q);
      }
    }
    ++pivot_row;
  }
  std::vector<std::vector<u64>> out;
  for (std::size_t r = pivot_row; r < dim; ++r) {
    out.emplace_back(scratch.begin() + static_cast<std::ptrdiff_t>(r * width + k),
                     scratch.begin() + static_cast<std::ptrdiff_t>((r + 1) * width));
  }
  return out;
}

}  // namespace

bool enumerate_zero_patterns(const ProblemLInstance& inst,
                             const std::function<bool(const ZeroPatternSolution&)>& visit,
                             std::uint64_t budget) {
  const std::size_t n = inst.ambient();
  const std::size_t l = inst.required_zeros;
  if (l == 0 || l > n) throw ValidationError("required zero count must lie in [1, ambient dimension]");
  const auto subsets = binomial_checked(n, l);
  if (!subsets || *subsets > budget) {
    throw BudgetExceeded("exhaustive Problem L search over C(" + std::to_string(n) + ", " +
                         std::to_string(l) + ") subsets exceeds budget " + std::to_string(budget));
  }
  if (inst.dimension() == 0) return false;

  std::vector<std::size_t> z(l);
  for (std::size_t i = 0; i < l; ++i) z[i] = i;
  std::vector<u64> scratch;
  while (true) {
    for (auto& coeffs : block_left_null(inst.basis, z, scratch)) {
      ZeroPatternSolution sol = make_solution(left_multiply(coeffs, inst.basis));
      if (sol.zero_positions.size() == n) continue;  // basis rows dependent; cannot happen for a KernelBasis
      if (visit(sol)) return true;
    }
    // Next l-subset in lexicographic order.
    std::size_t i = l;
    while (i > 0 && z[i - 1] == n - l + (i - 1)) --i;
    if (i == 0) break;
    ++z[i - 1];
    for (std::size_t j = i; j < l; ++j) z[j] = z[j - 1] + 1;
  }
  return false;
}

std::optional<ZeroPatternSolution> solve_exhaustive(const ProblemLInstance& inst, std::uint64_t budget) {
  std::optional<ZeroPatternSolution> found;
  enumerate_zero_patterns(
      inst,
      [&](const ZeroPatternSolution& s) {
        found = s;
        return true;
      },
      budget);
  return found;
}

ConditionalEstimate conditional_success_estimate(unsigned n_prime, unsigned l, u64 /*q*/) {
  ConditionalEstimate e;
  e.numerator = static_cast<std::uint64_t>(l) * l;
  e.denominator = binomial(3ull * n_prime + l, l);
  e.value = std::min(1.0, static_cast<double>(e.numerator) / static_cast<double>(e.denominator));
  return e;
}

std::string_view to_string(SolverKind kind) noexcept {
  switch (kind) {
    case SolverKind::alg2:
      return "alg2";
    case SolverKind::exhaustive:
      return "exhaustive";
    case SolverKind::alg2_then_exhaustive:
      return "alg2-then-exhaustive";
  }
  return "?";
}

SolverKind parse_solver_kind(std::string_view text) {
  if (text == "alg2") return SolverKind::alg2;
  if (text == "exhaustive") return SolverKind::exhaustive;
  if (text == "alg2-then-exhaustive") return SolverKind::alg2_then_exhaustive;
  throw ValidationError("unknown solver '" + std::string(text) +
                        "' (expected alg2, exhaustive or alg2-then-exhaustive)");
}

}  // namespace ecdlp
