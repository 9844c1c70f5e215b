#include <benchmark/benchmark.h>

#include "aniso/dissipation.hpp"
#include "aniso/integrator.hpp"
#include "aniso/model.hpp"
#include "aniso/synthesis.hpp"
#include "aniso/transform.hpp"

namespace {

aniso::SimulationState sample_state(int n) {
  const aniso::Grid2D g(n);
  return aniso::SimulationState(0.0, aniso::synthesize_divfree_velocity(g, {2.0, 1.0, 0.5, 1}),
                                aniso::synthesize_field(g, {2.0, 1.0, 0.5, 2}));
}

void BM_RoundTrip(benchmark::State& st) {
  const aniso::SpectralField f = aniso::synthesize_field(aniso::Grid2D(static_cast<int>(st.range(0))), {});
  for (auto _ : st) benchmark::DoNotOptimize(aniso::to_spectral(aniso::to_physical(f)));
}
BENCHMARK(BM_RoundTrip)->Arg(64)->Arg(128)->Arg(256);

void BM_Rhs(benchmark::State& st) {
  const aniso::SimulationState s = sample_state(static_cast<int>(st.range(0)));
  const aniso::DissipationConfig cfg = aniso::dissipation_preset("thm2-d2");
  for (auto _ : st) benchmark::DoNotOptimize(aniso::rhs(s, cfg, aniso::RhsVariant::full()));
}
BENCHMARK(BM_Rhs)->Arg(64)->Arg(128);

void BM_Step(benchmark::State& st) {
  const aniso::SimulationState s = sample_state(static_cast<int>(st.range(0)));
  aniso::IntegratorConfig ic;
  ic.dt = 1e-3;
  aniso::Stepper stepper(aniso::dissipation_preset("thm2-d2"), s.grid(), ic);
  for (auto _ : st) benchmark::DoNotOptimize(stepper.step(s, ic.dt));
}
BENCHMARK(BM_Step)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
