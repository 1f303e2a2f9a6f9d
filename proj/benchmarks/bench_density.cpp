#include <benchmark/benchmark.h>

#include <numbers>

#include "heatdens/density.hpp"
#include "heatdens/oracle.hpp"
#include "heatdens/series.hpp"

using namespace heatdens;

namespace {

HeatProblem example(int k) {
  const auto u12 = Distribution::uniform(1, 2);
  if (k == 1)
    return {0, 6, u12, BoundaryValue::deterministic(-3), BoundaryValue::deterministic(3),
            KLProcess::brownian_bridge(Distribution::normal(0, 1))};
  if (k == 2)
    return {-8, 2 * std::numbers::pi + 1, u12, BoundaryValue::deterministic(-1),
            BoundaryValue::deterministic(2), KLProcess::log_damped(Distribution::quartic())};
  return {0,
          6,
          u12,
          BoundaryValue::random(Distribution::triangular(-5, -3, -2)),
          BoundaryValue::random(Distribution::truncated_exponential(0.5, 3, 5)),
          KLProcess::brownian_bridge(Distribution::normal(0, 1))};
}

// Quadrature curve on the 401-point default grid; args: example, N.
void BM_QuadratureCurve(benchmark::State& state) {
  const auto p = example(static_cast<int>(state.range(0)));
  const int N = static_cast<int>(state.range(1));
  const double x = state.range(0) == 2 ? 1.0 : 5.0;
  const double t = state.range(0) == 2 ? 0.1 : 0.2;
  const auto grid = default_grid(p, x, t, N);
  for (auto _ : state) benchmark::DoNotOptimize(density_uN(p, x, t, N, grid));
}
BENCHMARK(BM_QuadratureCurve)
    ->Args({1, 1})->Args({1, 2})->Args({1, 4})
    ->Args({2, 2})
    ->Args({3, 2})
    ->Unit(benchmark::kMillisecond);

void BM_MonteCarloCurve(benchmark::State& state) {
  const auto p = example(1);
  const auto grid = default_grid(p, 5.0, 0.2, 4);
  DensityOptions o;
  o.estimator = Estimator::ExpectationMC;
  o.mc_samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(density_uN(p, 5.0, 0.2, 4, grid, o));
}
BENCHMARK(BM_MonteCarloCurve)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_SeriesSampling(benchmark::State& state) {
  const auto p = example(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_uN(p, 5.0, 0.2, 4, n, 1));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n));
}
BENCHMARK(BM_SeriesSampling)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_KsDistance(benchmark::State& state) {
  const auto p = example(1);
  const auto emp = build_empirical(p, 5.0, 0.2, 2, 1'000'000, 1);
  const auto grid = covering_grid(default_grid(p, 5.0, 0.2, 2), emp, 401);
  const auto c = density_uN(p, 5.0, 0.2, 2, grid);
  for (auto _ : state) benchmark::DoNotOptimize(ks_distance(emp, c));
}
BENCHMARK(BM_KsDistance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
