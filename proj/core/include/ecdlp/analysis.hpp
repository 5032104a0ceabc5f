#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ecdlp/field.hpp"

namespace ecdlp {

// Exact binomial coefficient; empty on 64-bit overflow.
std::optional<u64> binomial_checked(u64 n, u64 k) noexcept;
// Throws std::overflow_error on 64-bit overflow.
u64 binomial(u64 n, u64 k);

/// k-part partitions of m modulo an odd prime p: k-subsets of distinct
/// nonzero residues summing to m, order ignored.
struct PartitionQuery {
  u64 m = 0;
  u64 p = 0;
  unsigned k = 0;
};

/// The closed form (p-1)(p-2)...(p-k+2)(p-k) / k!, kept as an exact fraction.
/// It is not always an integer; `integral` flags that anomaly.
struct PartitionFormula {
  u64 numerator = 0;
  u64 denominator = 1;
  bool integral = false;
  u64 value = 0;  // numerator / denominator when integral
};

// Throws ValidationError unless k > 2, p an odd prime and k < p.
PartitionFormula partition_count_formula(const PartitionQuery& query);

inline constexpr u64 kDefaultPartitionBudget = 50'000'000;

// Brute-force count by enumerating every k-subset of {1, ..., p-1}.
u64 partition_count_oracle(const PartitionQuery& query, u64 budget = kDefaultPartitionBudget);
// The same enumeration, all m at once: result[m] for m in [0, p).
std::vector<u64> partition_count_table(u64 p, unsigned k, u64 budget = kDefaultPartitionBudget);

struct PartitionAuditRow {
  u64 p = 0;
  unsigned k = 0;
  u64 m = 0;
  std::optional<PartitionFormula> formula;  // empty outside the formula's domain
  u64 oracle = 0;
  std::optional<bool> match;                // empty outside the domain; false for a non-integral value
};

struct PartitionAudit {
  std::vector<PartitionAuditRow> rows;
  // Per (p, k): the oracle counts over all m sum to C(p-1, k).
  bool oracle_consistent = true;
  std::size_t mismatches = 0;
  std::size_t anomalies = 0;  // non-integral formula values
};

PartitionAudit partition_audit(std::span<const u64> primes, std::span<const unsigned> ks);

struct ProbabilityModel {
  u64 p = 0;
  unsigned n_prime = 0;
  unsigned l = 0;
  u64 subsets = 0;                // C(3n' + l, l)
  double per_iteration = 0.0;     // 1 - (1 - 1/p)^C
  double alg2_conditional = 0.0;  // l^2 / C, clamped to 1
  double overall = 0.0;           // per_iteration * alg2_conditional
  double headline_ln = 0.0;       // 0.6 (ln p)^2 / p
  double headline_log2 = 0.0;     // 0.6 (log2 p)^2 / p
};

ProbabilityModel success_model(u64 p, unsigned n_prime, unsigned l);

struct ParameterChoice {
  unsigned n_prime = 0;
  unsigned l = 0;
  u64 subsets = 0;                 // C(6n', 3n')
  double stirling_estimate = 0.0;  // 4^{3n'} / sqrt(pi 3n')
  ProbabilityModel model;
};

// Smallest n' with l = 3n' and C(6n', 3n') >= p.
ParameterChoice select_parameters(u64 p);

struct ProportionInterval {
  double low = 0.0;
  double high = 0.0;
};

// Wilson score interval; z = 1.96 gives 95%.
ProportionInterval wilson_interval(u64 successes, u64 trials, double z = 1.96);

}  // namespace ecdlp
