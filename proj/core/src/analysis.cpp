#include "ecdlp/analysis.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ecdlp/error.hpp"

namespace ecdlp {

std::optional<u64> binomial_checked(u64 n, u64 k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (u64 i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) return std::nullopt;
  }
  return static_cast<u64>(acc);
}

u64 binomial(u64 n, u64 k) {
  auto v = binomial_checked(n, k);
  if (!v) throw std::overflow_error("C(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
  return *v;
}

PartitionFormula partition_count_formula(const PartitionQuery& query) {
  const u64 p = query.p;
  const unsigned k = query.k;
  if (k <= 2) throw ValidationError("partition formula needs k > 2");
  if (p % 2 == 0 || !is_prime(p)) throw ValidationError("partition formula needs an odd prime p");
  if (k >= p) throw ValidationError("partition formula needs k < p");

  // (p-1)(p-2)...(p-k+2) * (p-k): boxes 1..k-1, the last of them losing one choice.
  unsigned __int128 num = 1;
  for (u64 i = 1; i + 2 <= k; ++i) num *= (p - i);
  num *= (p - k);
  unsigned __int128 den = 1;
  for (u64 i = 2; i <= k; ++i) den *= i;
  if (num > UINT64_MAX || den > UINT64_MAX) throw std::overflow_error("partition formula overflows 64 bits");

  PartitionFormula f;
  f.numerator = static_cast<u64>(num);
  f.denominator = static_cast<u64>(den);
  f.integral = f.numerator % f.denominator == 0;
  if (f.integral) f.value = f.numerator / f.denominator;
  return f;
}

std::vector<u64> partition_count_table(u64 p, unsigned k, u64 budget) {
  if (p < 2) throw ValidationError("modulus must be at least 2");
  std::vector<u64> counts(p, 0);
  if (k == 0 || k > p - 1) {
    if (k == 0) counts[0] = 1;
    return counts;
  }
  auto total = binomial_checked(p - 1, k);
  if (!total || *total > budget) {
    throw BudgetExceeded("C(" + std::to_string(p - 1) + ", " + std::to_string(k) + ") subsets exceed budget");
  }
  std::vector<u64> parts(k);
  for (unsigned i = 0; i < k; ++i) parts[i] = i + 1;
  while (true) {
    u64 sum = 0;
    for (u64 v : parts) sum = add_mod(sum, v, p);
    ++counts[sum];
    unsigned i = k;
    while (i > 0 && parts[i - 1] == p - 1 - (k - i)) --i;
    if (i == 0) break;
    ++parts[i - 1];
    for (unsigned j = i; j < k; ++j) parts[j] = parts[j - 1] + 1;
  }
  return counts;
}

u64 partition_count_oracle(const PartitionQuery& query, u64 budget) {
  if (query.m >= query.p) throw ValidationError("m must be a residue in [0, p)");
  return partition_count_table(query.p, query.k, budget)[query.m];
}

PartitionAudit partition_audit(std::span<const u64> primes, std::span<const unsigned> ks) {
  PartitionAudit audit;
  for (u64 p : primes) {
    for (unsigned k : ks) {
      std::vector<u64> table = partition_count_table(p, k);
      u64 total = std::accumulate(table.begin(), table.end(), u64{0});
      if (total != binomial(p - 1, k)) audit.oracle_consistent = false;

      std::optional<PartitionFormula> formula;
      try {
        formula = partition_count_formula({0, p, k});
      } catch (const ValidationError&) {
        formula.reset();
      }
      if (formula && !formula->integral) ++audit.anomalies;
      for (u64 m = 0; m < p; ++m) {
        PartitionAuditRow row{p, k, m, formula, table[m], std::nullopt};
        if (formula) {
          row.match = formula->integral && formula->value == table[m];
          if (!*row.match) ++audit.mismatches;
        }
        audit.rows.push_back(row);
      }
    }
  }
  return audit;
}

ProbabilityModel success_model(u64 p, unsigned n_prime, unsigned l) {
  if (p < 2 || n_prime == 0 || l == 0) throw ValidationError("success model needs p >= 2, n' >= 1, l >= 1");
  ProbabilityModel m;
  m.p = p;
  m.n_prime = n_prime;
  m.l = l;
  m.subsets = binomial(3ull * n_prime + l, l);
  const double pd = static_cast<double>(p);
  m.per_iteration = -std::expm1(static_cast<double>(m.subsets) * std::log1p(-1.0 / pd));
  m.alg2_conditional = std::min(1.0, static_cast<double>(l) * l / static_cast<double>(m.subsets));
  m.overall = m.per_iteration * m.alg2_conditional;
  const double ln_p = std::log(pd);
  const double log2_p = std::log2(pd);
  m.headline_ln = std::min(1.0, 0.6 * ln_p * ln_p / pd);
  m.headline_log2 = std::min(1.0, 0.6 * log2_p * log2_p / pd);
  return m;
}

ParameterChoice select_parameters(u64 p) {
  if (p < 5) throw ValidationError("parameter selection needs p >= 5");
  for (unsigned n = 1;; ++n) {
    auto c = binomial_checked(6ull * n, 3ull * n);
    if (!c) throw std::overflow_error("no 64-bit central binomial reaches p");
    if (*c >= p) {
      ParameterChoice choice;
      choice.n_prime = n;
      choice.l = 3 * n;
      choice.subsets = *c;
      const double half = 3.0 * n;
      choice.stirling_estimate = std::pow(4.0, half) / std::sqrt(std::numbers::pi * half);
      choice.model = success_model(p, n, 3 * n);
      return choice;
    }
  }
}

ProportionInterval wilson_interval(u64 successes, u64 trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

}  // namespace ecdlp
