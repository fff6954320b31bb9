#include <benchmark/benchmark.h>

#include <numbers>

#include "aho/cdynamics.hpp"
#include "aho/oracles.hpp"
#include "aho/phasespace.hpp"
#include "aho/propagator.hpp"

namespace {

void BM_KernelTable(benchmark::State& state) {
  const aho::ModelParams p{0.1, 0.01};
  const int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    aho::KernelTable kt(p, 3.7, nmax);
    benchmark::DoNotOptimize(kt.gamma(nmax));
  }
}
BENCHMARK(BM_KernelTable)->Arg(40)->Arg(200);

void BM_Propagate(benchmark::State& state) {
  const aho::ModelParams p{0.1, 0.01};
  const int nmax = static_cast<int>(state.range(0));
  const auto rho = aho::coherent_density(0.2 * nmax / 2.0, nmax, 1.0).rho;
  for (auto _ : state) {
    auto out = aho::propagate(rho, 3.0, p, aho::KernelFamily::Quantum);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Propagate)->Arg(26)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_WignerRender(benchmark::State& state) {
  const auto rho = aho::coherent_density(2.0, 26);
  const auto geom = aho::PhaseGrid::window(6.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto grid = aho::wigner_from_density(rho, geom);
    benchmark::DoNotOptimize(grid.values.data());
  }
}
BENCHMARK(BM_WignerRender)->Arg(101)->Arg(301)->Unit(benchmark::kMillisecond);

void BM_PiMn(benchmark::State& state) {
  const aho::Complex alpha(1.3, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aho::pi_mn(20, 35, alpha));
  }
}
BENCHMARK(BM_PiMn);

void BM_SdeEnsemble(benchmark::State& state) {
  const aho::ModelParams p{0.1, 0.01};
  aho::SdeConfig cfg;
  cfg.ntraj = state.range(0);
  cfg.dt = 1e-2;
  cfg.seed = 1;
  for (auto _ : state) {
    auto pts = aho::sde_ensemble(2.0, 1.0, p, cfg);
    benchmark::DoNotOptimize(pts.data());
  }
}
BENCHMARK(BM_SdeEnsemble)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
