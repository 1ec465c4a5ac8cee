// Microbenchmarks for the hot paths: the O(N) weight recurrence against the
// O(N^2) series oracle, quadrature application, the implicit Caputo solver,
// and the starting-weight solve.
#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "fractheta/correction.hpp"
#include "fractheta/grid.hpp"
#include "fractheta/quadrature.hpp"
#include "fractheta/scheme.hpp"
#include "fractheta/solvers.hpp"
#include "fractheta/weights.hpp"

namespace {

using namespace fractheta;

ThetaScheme bench_scheme(double alpha) {
  return make_scheme(Family::bt, alpha, 0.2);
}

void bm_weights_by_recurrence(benchmark::State& state) {
  const ThetaScheme scheme = bench_scheme(0.5);
  const auto n_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weights_by_recurrence(scheme, n_max));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_weights_by_recurrence)->Arg(1024)->Arg(4096)->Arg(16384)->Complexity();

void bm_series_oracle(benchmark::State& state) {
  const ThetaScheme scheme = bench_scheme(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_oracle(scheme, 256));
  }
}
BENCHMARK(bm_series_oracle);

void bm_quadrature_apply(benchmark::State& state) {
  const ThetaScheme scheme = bench_scheme(0.5);
  const UniformGrid grid(1.0, 1024);
  const WeightTable table = weights_by_recurrence(scheme, grid.N);
  std::vector<double> samples(grid.N + 1);
  for (std::size_t n = 0; n <= grid.N; ++n) {
    const double x = grid.node(n);
    samples[n] = x * x;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(table, nullptr, samples, grid));
  }
}
BENCHMARK(bm_quadrature_apply);

void bm_solve_caputo(benchmark::State& state) {
  const ThetaScheme scheme = bench_scheme(-0.5);
  const CaputoProblem problem = manufactured_caputo(0.5);
  const UniformGrid grid(1.0, 4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_caputo_linear(scheme, problem, grid));
  }
}
BENCHMARK(bm_solve_caputo);

void bm_starting_weights(benchmark::State& state) {
  const ThetaScheme scheme = bench_scheme(0.5);
  const WeightTable table = weights_by_recurrence(scheme, 1024);
  const ExponentSet exps = exponent_set(1.1, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_starting_weights(table, exps, 1024));
  }
}
BENCHMARK(bm_starting_weights);

}  // namespace

BENCHMARK_MAIN();
