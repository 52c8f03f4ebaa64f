#include <fracdq/bench.hpp>
#include <fracdq/dqweights.hpp>
#include <fracdq/kernels.hpp>
#include <fracdq/quadrature.hpp>
#include <fracdq/solver.hpp>

#include <benchmark/benchmark.h>

using namespace fracdq;

static void BM_JacobiRule(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_rule(n, 0.0, -0.5));
}
BENCHMARK(BM_JacobiRule)->Arg(16)->Arg(64)->Arg(256);

static void BM_ComputeWeights(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const Grid grid = chebyshev_grid(0.0, 1.0, M);
  const Kernel kernel(Family::GA, default_shape(Family::GA, M, grid.length()));
  const JacobiRule rule = caputo_rule(kDefaultQuadraturePoints, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(compute_weights(kernel, grid, 1.5, rule));
}
BENCHMARK(BM_ComputeWeights)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_Solve(benchmark::State& state) {
  const int M = 20;
  const auto N = static_cast<std::size_t>(state.range(0));
  const Grid grid = chebyshev_grid(0.0, 1.0, M);
  const Kernel kernel(Family::MQ, default_shape(Family::MQ, M, grid.length()));
  const Problem problem = bench::example2_problem();
  const WeightSet W = compute_weights(kernel, grid, problem.alpha, caputo_rule(kDefaultQuadraturePoints, problem.alpha));
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem, grid, W, N, {.keep_history = false}));
}
BENCHMARK(BM_Solve)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
