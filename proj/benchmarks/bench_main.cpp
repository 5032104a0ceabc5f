#include <benchmark/benchmark.h>

#include "ecdlp/attack.hpp"
#include "ecdlp/fixtures.hpp"
#include "ecdlp/linalg.hpp"
#include "ecdlp/problem_l.hpp"
#include "ecdlp/random.hpp"

using namespace ecdlp;

namespace {

IterationSample sample(unsigned n_prime, u64 seed) {
  static const GroupSpec g = medium_fixture();
  AttackConfig cfg{g, scalar_mul(g, 321)};
  cfg.n_prime = n_prime;
  Rng rng(seed);
  return sample_iteration(cfg, rng);
}

}  // namespace

static void BM_ScalarMul(benchmark::State& state) {
  const GroupSpec g = medium_fixture();
  u64 r = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scalar_mul(g, r));
    r = r * 7 % 907 + 1;
  }
}
BENCHMARK(BM_ScalarMul);

static void BM_Rref(benchmark::State& state) {
  const IterationSample s = sample(static_cast<unsigned>(state.range(0)), 1);
  const MatrixFq t = s.rows.transpose();
  for (auto _ : state) benchmark::DoNotOptimize(rref(t));
}
BENCHMARK(BM_Rref)->DenseRange(1, 4);

static void BM_LeftKernel(benchmark::State& state) {
  const IterationSample s = sample(static_cast<unsigned>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(left_kernel(s.rows));
}
BENCHMARK(BM_LeftKernel)->DenseRange(1, 4);

static void BM_ExhaustiveProblemL(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const ProblemLInstance inst = make_instance(left_kernel(sample(n, 3).rows), 3 * n);
  for (auto _ : state) {
    std::size_t visits = 0;
    enumerate_zero_patterns(inst, [&](const ZeroPatternSolution&) {
      ++visits;
      return false;
    });
    benchmark::DoNotOptimize(visits);
  }
}
BENCHMARK(BM_ExhaustiveProblemL)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_Alg2(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const ProblemLInstance inst = make_instance(left_kernel(sample(n, 4).rows), 3 * n);
  for (auto _ : state) benchmark::DoNotOptimize(solve_alg2(inst));
}
BENCHMARK(BM_Alg2)->DenseRange(1, 4);

static void BM_AttackIteration(benchmark::State& state) {
  const GroupSpec g = medium_fixture();
  AttackConfig cfg{g, scalar_mul(g, 321)};
  cfg.n_prime = 2;
  cfg.accident_check = false;
  u64 i = 0;
  for (auto _ : state) {
    Rng rng = Rng::substream(5, i);
    benchmark::DoNotOptimize(attack_iteration(cfg, i++, rng));
  }
}
BENCHMARK(BM_AttackIteration)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
