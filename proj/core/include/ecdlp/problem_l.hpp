#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecdlp/linalg.hpp"

namespace ecdlp {

/// Does the row space of `basis` contain a nonzero vector with at least
/// `required_zeros` zero coordinates? In the attack the basis is the left
/// kernel (l vectors in F_q^{3n'+l}) and required_zeros = l.
struct ProblemLInstance {
  MatrixFq basis;
  std::size_t required_zeros = 0;

  std::size_t ambient() const noexcept { return basis.cols(); }
  std::size_t dimension() const noexcept { return basis.rows(); }
};

ProblemLInstance make_instance(const KernelBasis& basis, std::size_t required_zeros);

struct ZeroPatternSolution {
  std::vector<u64> vector;
  std::vector<std::size_t> zero_positions;  // sorted

  std::size_t support_size() const noexcept { return vector.size() - zero_positions.size(); }
};

ZeroPatternSolution make_solution(std::vector<u64> vector);

// Nonzero, inside the span, and with at least required_zeros zeros.
bool verify_solution(const ProblemLInstance& inst, const ZeroPatternSolution& sol);

/// Multiple Gaussian elimination. Two l-column blocks are processed in turn;
/// each is reduced to lower-triangular then diagonal shape, and after every
/// reduction all rows are scanned for one with at least l zeros.
struct Alg2Trace {
  std::optional<ZeroPatternSolution> solution;
  // 1..4 for block1-lower, block1-diagonal, block2-lower, block2-diagonal; 0 if none.
  int checkpoint = 0;
  bool singular_block[2] = {false, false};
  std::size_t column_swaps = 0;
};

Alg2Trace solve_alg2_traced(const ProblemLInstance& inst);
std::optional<ZeroPatternSolution> solve_alg2(const ProblemLInstance& inst);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 5'000'000;

/// Complete solver: for each required_zeros-subset Z of positions (in
/// lexicographic order) the span contains a nonzero vector vanishing on Z
/// iff the basis restricted to the columns Z is rank deficient. `visit` sees
/// each such vector (one per null direction of the restricted block) and
/// returns true to stop. Returns whether a visit stopped the scan.
/// Throws BudgetExceeded when C(ambient, required_zeros) exceeds `budget`.
bool enumerate_zero_patterns(const ProblemLInstance& inst,
                             const std::function<bool(const ZeroPatternSolution&)>& visit,
                             std::uint64_t budget = kDefaultEnumerationBudget);

std::optional<ZeroPatternSolution> solve_exhaustive(const ProblemLInstance& inst,
                                                    std::uint64_t budget = kDefaultEnumerationBudget);

struct ConditionalEstimate {
  std::uint64_t numerator = 0;    // l^2
  std::uint64_t denominator = 1;  // C(3n' + l, l)
  double value = 0.0;             // clamped to [0, 1]
};

// Heuristic success rate of solve_alg2 on a solvable instance: l^2 / C(3n'+l, l).
ConditionalEstimate conditional_success_estimate(unsigned n_prime, unsigned l, u64 q);

enum class SolverKind { alg2, exhaustive, alg2_then_exhaustive };

std::string_view to_string(SolverKind kind) noexcept;
SolverKind parse_solver_kind(std::string_view text);

}  // namespace ecdlp
