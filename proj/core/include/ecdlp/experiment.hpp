#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "ecdlp/analysis.hpp"
#include "ecdlp/attack.hpp"

namespace ecdlp {

struct ExperimentConfig {
  GroupSpec group;
  unsigned n_prime = 1;
  unsigned l = 0;  // 0 selects 3 n'
  SolverKind solver = SolverKind::exhaustive;
  u64 trials = 0;
  u64 seed = 1;
  std::optional<u64> fixed_m{};  // otherwise each trial draws m uniformly from [1, p)
  bool accident_check = true;
  unsigned threads = 1;
  u64 enumeration_budget = kDefaultEnumerationBudget;
  bool keep_kernels = false;

  unsigned resolved_l() const noexcept { return l != 0 ? l : 3 * n_prime; }
};

struct TrialRecord {
  u64 trial = 0;
  u64 m = 0;
  bool success = false;
  std::size_t kernel_dim = 0;
  bool solver_found = false;
  RejectReason reason = RejectReason::none;
  Route route = Route::none;
  double elapsed_us = 0.0;
  std::optional<KernelBasis> kernel;  // only with keep_kernels
};

struct ExperimentSummary {
  u64 trials = 0;
  u64 successes = 0;
  u64 accidents = 0;
  double rate = 0.0;
  ProportionInterval ci95;
  ProbabilityModel model;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;  // in trial order
  ExperimentSummary summary;
};

/// Runs `trials` independent single-iteration attacks. Trial t draws m and
/// its sample from Rng::substream(seed, t), so results do not depend on the
/// thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Columns: trial,m,success,solver,kernel_dim,reject_reason,route[,elapsed_us]
void write_trials_csv(std::ostream& os, const ExperimentResult& result, SolverKind solver, bool timing);

}  // namespace ecdlp
