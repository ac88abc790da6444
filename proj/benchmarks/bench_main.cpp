#include <benchmark/benchmark.h>

#include "casimir/lateral_force.hpp"
#include "casimir/specfun.hpp"
#include "casimir/vertical_force.hpp"

namespace {

using namespace casimir;

void BM_BesselJ1(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0)) + 0.37;
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j1(z));
}
BENCHMARK(BM_BesselJ1)->Arg(5)->Arg(50)->Arg(555);

void BM_AveragedForce(benchmark::State& state) {
  const auto config = default_experiment();
  const auto dist = kAllDistributions[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(averaged_force(300.0, config, dist));
  state.SetLabel(std::string(to_string(dist)));
}
BENCHMARK(BM_AveragedForce)->DenseRange(0, 3);

void BM_ForceCurve(benchmark::State& state) {
  const auto config = default_experiment();
  for (auto _ : state)
    benchmark::DoNotOptimize(make_force_curve(config, PositionDistribution::kTriangular, kValidityMin,
                                              kValidityMax, 62));
}
BENCHMARK(BM_ForceCurve)->Unit(benchmark::kMillisecond);

void BM_LateralForce(benchmark::State& state) {
  const auto config = default_experiment();
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lateral_force({x, 200.0}, config));
    x += 1.0;
  }
}
BENCHMARK(BM_LateralForce);

void BM_Equilibria(benchmark::State& state) {
  const auto config = default_experiment();
  for (auto _ : state) benchmark::DoNotOptimize(find_equilibria(200.0, config));
}
BENCHMARK(BM_Equilibria)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
