#include "ecdlp/experiment.hpp"

#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "ecdlp/error.hpp"

namespace ecdlp {

namespace {

TrialRecord run_trial(const ExperimentConfig& cfg, u64 trial) {
  const auto start = std::chrono::steady_clock::now();
  const u64 p = cfg.group.order().value();
  Rng rng = Rng::substream(cfg.seed, trial);
  TrialRecord out;
  out.trial = trial;
  out.m = cfg.fixed_m ? *cfg.fixed_m % p : rng.uniform(1, p);

  AttackConfig attack{.group = cfg.group,
                      .target = scalar_mul(cfg.group, out.m),
                      .n_prime = cfg.n_prime,
                      .l = cfg.l,
                      .solver = cfg.solver,
                      .max_iterations = 1,
                      .seed = cfg.seed,
                      .accident_check = cfg.accident_check,
                      .enumeration_budget = cfg.enumeration_budget};
  IterationHooks hooks;
  if (cfg.keep_kernels) {
    hooks.on_kernel = [&out](const IterationSample&, const KernelBasis& k) { out.kernel = k; };
  }
  IterationRecord rec = attack_iteration(attack, trial, rng, &hooks);
  out.success = rec.m.has_value();
  out.kernel_dim = rec.kernel_dim;
  out.solver_found = rec.solver_found;
  out.reason = out.success ? RejectReason::none : rec.first_reject;
  out.route = rec.route;
  out.elapsed_us =
      std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.trials == 0) throw ValidationError("experiment needs at least one trial");
  const u64 p = cfg.group.order().value();
  if (cfg.fixed_m && *cfg.fixed_m % p == 0) throw ValidationError("fixed m must be nonzero mod p");
  {
    // Validate the shared parameters once, against an arbitrary valid target.
    AttackConfig probe{.group = cfg.group, .target = cfg.group.generator(), .n_prime = cfg.n_prime, .l = cfg.l};
    validate(probe);
  }

  ExperimentResult result;
  result.records.resize(cfg.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::min<u64>(cfg.trials, 256))));
  if (workers == 1) {
    for (u64 t = 0; t < cfg.trials; ++t) result.records[t] = run_trial(cfg, t);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (u64 t = w; t < cfg.trials; t += workers) result.records[t] = run_trial(cfg, t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  ExperimentSummary& s = result.summary;
  s.trials = cfg.trials;
  for (const TrialRecord& r : result.records) {
    if (r.success) ++s.successes;
    if (r.route == Route::accident) ++s.accidents;
  }
  s.rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
  s.ci95 = wilson_interval(s.successes, s.trials);
  s.model = success_model(p, cfg.n_prime, cfg.resolved_l());
  return result;
}

void write_trials_csv(std::ostream& os, const ExperimentResult& result, SolverKind solver, bool timing) {
  os << "trial,m,success,solver,kernel_dim,reject_reason,route";
  if (timing) os << ",elapsed_us";
  os << '\n';
  for (const TrialRecord& r : result.records) {
    os << r.trial << ',' << r.m << ',' << (r.success ? 1 : 0) << ',' << to_string(solver) << ','
       << r.kernel_dim << ',' << to_string(r.reason) << ',' << to_string(r.route);
    if (timing) os << ',' << static_cast<u64>(r.elapsed_us);
    os << '\n';
  }
}

}  // namespace ecdlp
