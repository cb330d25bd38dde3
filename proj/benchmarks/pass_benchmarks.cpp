#include <benchmark/benchmark.h>

#include "pass/deployment_sim.hpp"
#include "pass/far_field.hpp"
#include "pass/mode_coupling.hpp"
#include "pass/slab_modes.hpp"

namespace {

pass::SlabGeometry slab(double v) {
  const double n1 = 1.4491376746189439;
  return {pass::width_for_v(n1, 1.0, 60e9, v), n1, 1.0, 60e9};
}

pass::PassConfiguration config() {
  const auto g = slab(1.5);
  return pass::PassConfiguration::make(g, g, 2.0 * g.wavelength(), 20.0, 40.0);
}

void BM_SolveTe0(benchmark::State& state) {
  const auto g = slab(1.2);
  for (auto _ : state) benchmark::DoNotOptimize(pass::solve_te0(g));
}
BENCHMARK(BM_SolveTe0);

void BM_CouplingCoefficient(benchmark::State& state) {
  const auto cfg = config();
  for (auto _ : state) benchmark::DoNotOptimize(pass::coupling_coefficient(cfg));
}
BENCHMARK(BM_CouplingCoefficient);

void BM_ComputePattern(benchmark::State& state) {
  const auto cfg = config();
  const double kappa = pass::coupling_coefficient(cfg);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pass::compute_pattern(cfg, kappa, n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ComputePattern)->Arg(360)->Arg(1440)->Arg(5760);

void BM_OracleAngle(benchmark::State& state) {
  const auto cfg = config();
  const double kappa = pass::coupling_coefficient(cfg);
  pass::OracleOptions opt;
  opt.panels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pass::oracle_radiation_integral(cfg, kappa, 1.0, opt));
  }
}
BENCHMARK(BM_OracleAngle)->Arg(512)->Arg(2048);

void BM_OptimizePlacement(benchmark::State& state) {
  const auto cfg = config();
  const auto coupling = pass::solve_coupling(cfg);
  const auto pattern = pass::compute_pattern(cfg, coupling.kappa);
  const pass::ChannelEvaluator eval(cfg, coupling, pattern);
  const auto grid = pass::placement_grid(40.0, cfg.pa_length, 0.01);
  const auto model = state.range(0) == 0 ? pass::PatternModel::omni
                                         : pass::PatternModel::directional;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pass::optimize_placement(eval, {13.7, -5.0}, model, grid));
  }
}
BENCHMARK(BM_OptimizePlacement)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
