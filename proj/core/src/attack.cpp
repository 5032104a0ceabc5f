#include "ecdlp/attack.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecdlp/analysis.hpp"
#include "ecdlp/error.hpp"
#include "ecdlp/veronese.hpp"

namespace ecdlp {

void validate(const AttackConfig& cfg) {
  const Curve& c = cfg.group.curve();
  const u64 p = cfg.group.order().value();
  if (cfg.n_prime == 0) throw ValidationError("n' must be at least 1");
  if (!c.contains(cfg.target)) throw ValidationError("target Q is not on the curve");
  if (cfg.target.is_identity()) throw ValidationError("target Q is the identity (m = 0); nothing to attack");
  if (!c.multiply(cfg.target, p).is_identity()) {
    throw ValidationError("target Q is not in the subgroup of order " + std::to_string(p));
  }
  if (cfg.total_rows() > p - 1) {
    throw ValidationError("3n' + l = " + std::to_string(cfg.total_rows()) +
                          " exceeds p - 1; not enough distinct multipliers");
  }
}

u64 default_max_iterations(const AttackConfig& cfg) {
  ProbabilityModel model = success_model(cfg.group.order().value(), cfg.n_prime, cfg.resolved_l());
  double per_iteration = model.per_iteration;
  if (cfg.solver == SolverKind::alg2) per_iteration *= model.alg2_conditional;
  if (per_iteration <= 0.0) return 1;
  return static_cast<u64>(std::ceil(10.0 / per_iteration));
}

bool IterationSample::has_repeated_rows() const {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) return true;
  return false;
}

namespace {

std::vector<u64> distinct_multipliers(std::size_t count, u64 p, Rng& rng) {
  std::vector<u64> out;
  out.reserve(count);
  while (out.size() < count) {
    u64 r;
    do {
      r = rng.uniform(1, p);
    } while (std::find(out.begin(), out.end(), r) != out.end());
    out.push_back(r);
  }
  return out;
}

}  // namespace

IterationSample sample_iteration(const AttackConfig& cfg, Rng& rng) {
  const GroupSpec& g = cfg.group;
  const Curve& c = g.curve();
  const u64 p = g.order().value();
  const MonomialBasis monomials(cfg.n_prime);

  IterationSample s{{}, {}, {}, MatrixFq(c.field(), cfg.total_rows(), monomials.size())};
  s.p_multipliers = distinct_multipliers(cfg.p_rows(), p, rng);
  s.q_multipliers = distinct_multipliers(cfg.q_rows(), p, rng);
  s.points.reserve(cfg.total_rows());
  for (u64 r : s.p_multipliers) s.points.push_back(scalar_mul(g, r));
  for (u64 r : s.q_multipliers) s.points.push_back(c.negate(c.multiply(cfg.target, r)));
  for (std::size_t i = 0; i < s.points.size(); ++i) evaluate_row_into(monomials, s.points[i], s.rows.row(i));
  return s;
}

std::optional<Accident> detect_accident(const IterationSample& sample, const GroupSpec& group) {
  const u64 p = group.order().value();
  const std::size_t np = sample.p_multipliers.size();
  for (std::size_t i = 0; i < np; ++i) {
    const Point& rp = sample.points[i];
    for (std::size_t j = 0; j < sample.q_multipliers.size(); ++j) {
      const Point& neg_rq = sample.points[np + j];  // -r' Q
      if (rp.x() != neg_rq.x()) continue;
      Accident a{i, j, sample.p_multipliers[i], sample.q_multipliers[j], rp == neg_rq, 0};
      // r P = -r' Q gives m = -r / r'; r P = r' Q gives m = r / r'.
      u64 ratio = mul_mod(a.r, *inv_mod(a.r_prime, p), p);
      a.m = a.row_collision ? sub_mod(0, ratio, p) : ratio;
      return a;
    }
  }
  return std::nullopt;
}

std::string_view to_string(RejectReason reason) noexcept {
  switch (reason) {
    case RejectReason::none:
      return "none";
    case RejectReason::no_solution:
      return "no_solution";
    case RejectReason::support_size:
      return "support_size";
    case RejectReason::missing_p_block:
      return "missing_p_block";
    case RejectReason::missing_q_block:
      return "missing_q_block";
    case RejectReason::b_zero:
      return "b_zero";
    case RejectReason::unverified:
      return "unverified";
  }
  return "?";
}

std::string_view to_string(Route route) noexcept {
  switch (route) {
    case Route::none:
      return "none";
    case Route::accident:
      return "accident";
    case Route::kernel:
      return "kernel";
  }
  return "?";
}

Decoded decode_solution(const ZeroPatternSolution& v, std::span<const u64> p_multipliers,
                        std::span<const u64> q_multipliers, u64 p) {
  const std::size_t np = p_multipliers.size();
  if (v.vector.size() != np + q_multipliers.size()) {
    throw ValidationError("kernel vector length does not match the sample");
  }
  // 3n' = |I| + 1 points on the interpolating curve.
  if (v.support_size() != np + 1) return {std::nullopt, RejectReason::support_size};
  u64 a = 0, b = 0;
  bool p_hit = false, q_hit = false;
  for (std::size_t i = 0; i < v.vector.size(); ++i) {
    if (v.vector[i] == 0) continue;
    if (i < np) {
      a = add_mod(a, p_multipliers[i] % p, p);
      p_hit = true;
    } else {
      b = add_mod(b, q_multipliers[i - np] % p, p);
      q_hit = true;
    }
  }
  if (!p_hit) return {std::nullopt, RejectReason::missing_p_block};
  if (!q_hit) return {std::nullopt, RejectReason::missing_q_block};
  if (b == 0) return {std::nullopt, RejectReason::b_zero};
  return {mul_mod(a, *inv_mod(b, p), p), RejectReason::none};
}

IterationRecord attack_iteration(const AttackConfig& cfg, u64 index, Rng& rng, const IterationHooks* hooks) {
  const GroupSpec& g = cfg.group;
  const u64 p = g.order().value();
  IterationRecord rec;
  rec.index = index;

  IterationSample sample = sample_iteration(cfg, rng);
  rec.repeated_rows = sample.has_repeated_rows();

  if (cfg.accident_check) {
    if (auto acc = detect_accident(sample, g)) {
      rec.accident = acc;
      if (scalar_mul(g, acc->m) == cfg.target) {
        rec.route = Route::accident;
        rec.m = acc->m;
        return rec;
      }
    }
  }

  KernelBasis kernel = left_kernel(sample.rows);
  rec.kernel_dim = kernel.dimension();
  if (hooks && hooks->on_kernel) hooks->on_kernel(sample, kernel);
  if (kernel.dimension() == 0) {
    rec.first_reject = RejectReason::no_solution;
    ++rec.rejects[static_cast<std::size_t>(RejectReason::no_solution)];
    return rec;
  }
  const ProblemLInstance inst{kernel.matrix(), cfg.resolved_l()};

  auto reject = [&](RejectReason why) {
    ++rec.rejects[static_cast<std::size_t>(why)];
    if (rec.first_reject == RejectReason::none) rec.first_reject = why;
  };
  auto try_candidate = [&](const ZeroPatternSolution& v) {
    rec.solver_found = true;
    ++rec.candidates;
    Decoded d = decode_solution(v, sample.p_multipliers, sample.q_multipliers, p);
    if (!d.m) {
      reject(d.reason);
      return false;
    }
    if (scalar_mul(g, *d.m) != cfg.target) {
      reject(RejectReason::unverified);
      return false;
    }
    rec.route = Route::kernel;
    rec.m = d.m;
    return true;
  };

  if (cfg.solver == SolverKind::alg2 || cfg.solver == SolverKind::alg2_then_exhaustive) {
    Alg2Trace trace = solve_alg2_traced(inst);
    rec.alg2_checkpoint = trace.checkpoint;
    if (trace.solution && try_candidate(*trace.solution)) return rec;
  }
  if (cfg.solver == SolverKind::exhaustive || cfg.solver == SolverKind::alg2_then_exhaustive) {
    if (enumerate_zero_patterns(inst, try_candidate, cfg.enumeration_budget)) return rec;
  }
  if (!rec.solver_found) reject(RejectReason::no_solution);
  return rec;
}

AttackOutcome run_attack(const AttackConfig& cfg) {
  validate(cfg);
  const u64 budget = cfg.max_iterations != 0 ? cfg.max_iterations : default_max_iterations(cfg);
  AttackOutcome out;
  for (u64 i = 0; i < budget; ++i) {
    Rng rng = Rng::substream(cfg.seed, i);
    IterationRecord rec = attack_iteration(cfg, i, rng);
    out.log.push_back(rec);
    out.iterations_used = i + 1;
    if (rec.m) {
      if (scalar_mul(cfg.group, *rec.m) != cfg.target) {
        throw InvariantViolation("attack produced an unverified logarithm");
      }
      out.m = rec.m;
      return out;
    }
  }
  out.failure = "iteration budget of " + std::to_string(budget) + " exhausted";
  return out;
}

std::optional<SubsetSumWitness> subset_sum_oracle(std::span<const u64> p_multipliers,
                                                  std::span<const u64> q_multipliers, u64 m_true, u64 p,
                                                  u64 budget) {
  if (m_true % p == 0) throw ValidationError("subset-sum oracle needs m != 0 (Q must not be the identity)");
  const std::size_t np = p_multipliers.size();
  const std::size_t n = np + q_multipliers.size();
  const std::size_t k = np + 1;
  if (k > n) return std::nullopt;
  auto total = binomial_checked(n, k);
  if (!total || *total > budget) throw BudgetExceeded("subset-sum oracle enumeration exceeds budget");

  std::vector<u64> entry(n);
  for (std::size_t i = 0; i < np; ++i) entry[i] = p_multipliers[i] % p;
  for (std::size_t j = 0; j < q_multipliers.size(); ++j) {
    entry[np + j] = sub_mod(0, mul_mod(m_true % p, q_multipliers[j] % p, p), p);
  }

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    u64 sum = 0, a = 0, b = 0;
    bool p_hit = false, q_hit = false;
    for (std::size_t idx : pick) {
      sum = add_mod(sum, entry[idx], p);
      if (idx < np) {
        a = add_mod(a, p_multipliers[idx] % p, p);
        p_hit = true;
      } else {
        b = add_mod(b, q_multipliers[idx - np] % p, p);
        q_hit = true;
      }
    }
    if (sum == 0 && p_hit && q_hit && b != 0) return SubsetSumWitness{pick, a, b};
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace ecdlp
