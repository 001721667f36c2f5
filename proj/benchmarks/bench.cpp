#include <benchmark/benchmark.h>

#include "ampsim/amplifier.hpp"
#include "ampsim/fock.hpp"
#include "ampsim/measures.hpp"
#include "ampsim/projection.hpp"

using namespace ampsim;

static void BM_Purity(benchmark::State& state) {
  const AmplifiedCoherentState st =
      amplify(Complex(10.0, 0.0), three_term_spec(10.0));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(purity(ps, order));
}
BENCHMARK(BM_Purity)->Arg(16)->Arg(24)->Arg(40);

static void BM_MomentumDensity(benchmark::State& state) {
  const AmplifiedCoherentState st =
      amplify(Complex(2.0, 0.0), three_term_spec(1.5));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  const Grid1D grid(-14.0, 14.0, 2048);
  for (auto _ : state) benchmark::DoNotOptimize(pr_p(ps, grid, 16).values[0]);
  state.SetItemsProcessed(state.iterations() * grid.n);
}
BENCHMARK(BM_MomentumDensity);

static void BM_WignerPatch(benchmark::State& state) {
  const AmplifiedCoherentState st =
      amplify(Complex(1.0, 0.0), three_term_spec(2.0));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  const Grid2D grid = Grid2D::square(-0.1, 0.1, 16);
  for (auto _ : state) benchmark::DoNotOptimize(wigner(ps, grid, 16).values[0]);
  state.SetItemsProcessed(state.iterations() * grid.x.n * grid.p.n);
}
BENCHMARK(BM_WignerPatch);

static void BM_FockBuild(benchmark::State& state) {
  const AmplifiedCoherentState st =
      amplify(Complex(2.0, 0.0), two_term_spec(1.5));
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fock_from_amplified(st, dim).trace());
}
BENCHMARK(BM_FockBuild)->Arg(64)->Arg(96);

BENCHMARK_MAIN();
