#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecdlp/curve.hpp"
#include "ecdlp/linalg.hpp"
#include "ecdlp/problem_l.hpp"
#include "ecdlp/random.hpp"

namespace ecdlp {

struct AttackConfig {
  GroupSpec group;
  Point target;  // Q = m P
  unsigned n_prime = 1;
  unsigned l = 0;  // 0 selects 3 n'
  SolverKind solver = SolverKind::exhaustive;
  u64 max_iterations = 0;  // 0 selects default_max_iterations()
  u64 seed = 1;
  bool accident_check = true;
  u64 enumeration_budget = kDefaultEnumerationBudget;

  unsigned resolved_l() const noexcept { return l != 0 ? l : 3 * n_prime; }
  std::size_t p_rows() const noexcept { return 3 * std::size_t{n_prime} - 1; }
  std::size_t q_rows() const noexcept { return std::size_t{resolved_l()} + 1; }
  std::size_t total_rows() const noexcept { return p_rows() + q_rows(); }
};

// Throws ValidationError for an unusable configuration.
void validate(const AttackConfig& cfg);

// ceil(10 / predicted per-iteration success) for the configured solver.
u64 default_max_iterations(const AttackConfig& cfg);

/// One draw of multipliers and the matrix built from them. Rows 0 .. 3n'-2
/// are monomial rows of r_i P for r_i in I; rows 3n'-1 .. 3n'+l-1 are those
/// of -r'_j Q for r'_j in J.
struct IterationSample {
  std::vector<u64> p_multipliers;  // I
  std::vector<u64> q_multipliers;  // J
  std::vector<Point> points;       // in row order
  MatrixFq rows;

  bool has_repeated_rows() const;
};

// I and J are each sampled without replacement from [1, p).
IterationSample sample_iteration(const AttackConfig& cfg, Rng& rng);

/// r P = -r' Q (a repeated row) or r P = r' Q, found among the sampled points.
struct Accident {
  std::size_t p_index = 0;
  std::size_t q_index = 0;
  u64 r = 0;
  u64 r_prime = 0;
  bool row_collision = false;  // r P = -r' Q
  u64 m = 0;
};

std::optional<Accident> detect_accident(const IterationSample& sample, const GroupSpec& group);

enum class RejectReason {
  none,
  no_solution,      // Problem L solver found nothing
  support_size,     // support is not exactly 3n' positions
  missing_p_block,  // no nonzero among the P rows
  missing_q_block,  // no nonzero among the Q rows
  b_zero,           // sum of the selected J multipliers vanishes mod p
  unverified,       // decoded m fails m P = Q
};
inline constexpr std::size_t kRejectReasonCount = 7;

std::string_view to_string(RejectReason reason) noexcept;

struct Decoded {
  std::optional<u64> m;
  RejectReason reason = RejectReason::none;
};

// A = sum of I over nonzero P positions, B = sum of J over nonzero Q
// positions, m = A / B mod p.
Decoded decode_solution(const ZeroPatternSolution& v, std::span<const u64> p_multipliers,
                        std::span<const u64> q_multipliers, u64 p);

enum class Route { none, accident, kernel };

std::string_view to_string(Route route) noexcept;

struct IterationRecord {
  u64 index = 0;
  std::size_t kernel_dim = 0;  // 0 when the iteration ended at an accident
  bool repeated_rows = false;
  std::optional<Accident> accident;
  bool solver_found = false;  // the solver produced at least one vector
  std::size_t candidates = 0;
  int alg2_checkpoint = 0;
  std::array<std::size_t, kRejectReasonCount> rejects{};
  RejectReason first_reject = RejectReason::none;
  Route route = Route::none;
  std::optional<u64> m;  // verified
};

struct IterationHooks {
  std::function<void(const IterationSample&, const KernelBasis&)> on_kernel;
};

// One pass of sample -> left kernel -> Problem L -> decode -> verify.
IterationRecord attack_iteration(const AttackConfig& cfg, u64 index, Rng& rng,
                                 const IterationHooks* hooks = nullptr);

struct AttackOutcome {
  std::optional<u64> m;
  std::string failure;
  u64 iterations_used = 0;
  std::vector<IterationRecord> log;
};

/// Repeats attack iterations (iteration i draws from Rng::substream(seed, i))
/// until one yields a verified m or the budget runs out. A returned m always
/// satisfies m P = Q.
AttackOutcome run_attack(const AttackConfig& cfg);

struct SubsetSumWitness {
  std::vector<std::size_t> positions;  // row indices, sorted
  u64 a = 0;                           // sum of selected I
  u64 b = 0;                           // sum of selected J
};

/// Ground truth for a sample when m is known: a 3n'-subset of the entries
/// r_i (P rows) and -m r'_j (Q rows) that sums to 0 mod p, touches both
/// blocks, and has b != 0. First in lexicographic order.
std::optional<SubsetSumWitness> subset_sum_oracle(std::span<const u64> p_multipliers,
                                                  std::span<const u64> q_multipliers, u64 m_true, u64 p,
                                                  u64 budget = kDefaultEnumerationBudget);

}  // namespace ecdlp
