#include <benchmark/benchmark.h>

#include "lhm/config.hpp"
#include "lhm/features.hpp"
#include "lhm/lindblad.hpp"
#include "lhm/steady_state.hpp"
#include "lhm/sweep.hpp"

namespace {

lhm::RunConfig fig2() { return lhm::parse_config(*lhm::bundled_preset("fig2.cfg")); }

void BM_Rhs(benchmark::State& state) {
  const lhm::SystemParams p = fig2().system;
  const lhm::Matrix4 rho = lhm::steady_state_linear(p).rho.matrix();
  for (auto _ : state) benchmark::DoNotOptimize(lhm::rhs(rho, p));
}
BENCHMARK(BM_Rhs);

void BM_SteadyStateLinear(benchmark::State& state) {
  const lhm::SystemParams p = fig2().system;
  for (auto _ : state) benchmark::DoNotOptimize(lhm::steady_state_linear(p));
}
BENCHMARK(BM_SteadyStateLinear);

void BM_SteadyStateIntegrate(benchmark::State& state) {
  lhm::SystemParams p = fig2().system;
  p.delta1 = 20.0;
  const auto cfg = lhm::IntegratorConfig::for_params(p);
  for (auto _ : state) benchmark::DoNotOptimize(lhm::steady_state_integrate(p, lhm::default_initial_state(), cfg));
}
BENCHMARK(BM_SteadyStateIntegrate)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  lhm::SweepSpec spec = fig2().sweep_spec();
  spec.points = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lhm::sweep(spec, {.threads = 1}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sweep)->Arg(301)->Arg(3001)->Unit(benchmark::kMillisecond);

void BM_ExtractFeatures(benchmark::State& state) {
  const lhm::ResponseCurve curve = lhm::sweep(fig2().sweep_spec());
  for (auto _ : state) benchmark::DoNotOptimize(lhm::extract_features(curve, 0.02));
}
BENCHMARK(BM_ExtractFeatures)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
