#include <benchmark/benchmark.h>

#include "linwave/constraints/constraints.hpp"
#include "linwave/decomposition/split.hpp"
#include "linwave/evolution/cauchy.hpp"
#include "linwave/evolution/evolve.hpp"
#include "linwave/io/generators.hpp"
#include "linwave/spectral/transform.hpp"

using namespace linwave;

static void BM_Synthesize(benchmark::State& state) {
  const spectral::ModeLattice L(3, static_cast<int>(state.range(0)));
  const auto f = io::random_field(L, spectral::Rank::Sym2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral::synthesize(f, L.side()));
}
BENCHMARK(BM_Synthesize)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Dphi(benchmark::State& state) {
  const auto s = geometry::SliceGeometry::kasner(geometry::kDefaultKasner, 1.0);
  const auto p = io::random_pair(s, s.lattice(static_cast<int>(state.range(0))), {1});
  for (auto _ : state) benchmark::DoNotOptimize(constraints::dphi(p));
}
BENCHMARK(BM_Dphi)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SplitSolve(benchmark::State& state) {
  const auto s = geometry::SliceGeometry::flat_torus(3);
  const auto a = io::random_field(s.lattice(static_cast<int>(state.range(0))), spectral::Rank::Sym2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(decomposition::split_solve(a, decomposition::SplitPart::Momentum, s));
}
BENCHMARK(BM_SplitSolve)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

// Ten RK4 steps on Kasner; the per-step cost is the reported time / 10.
static void BM_KasnerRK4(benchmark::State& state) {
  const auto bg = geometry::SpacetimeBackground::kasner(geometry::kDefaultKasner);
  const auto s = bg.slice(1.0);
  const auto jet = evolution::build_cauchy_jet(io::random_pair(s, s.lattice(static_cast<int>(state.range(0))), {3}), bg);
  for (auto _ : state) benchmark::DoNotOptimize(evolution::evolve(jet, {1.01, 1e-3, false, {}}));
}
BENCHMARK(BM_KasnerRK4)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_MinkowskiExact(benchmark::State& state) {
  const auto bg = geometry::SpacetimeBackground::minkowski(3);
  const auto s = bg.slice(0.0);
  const auto jet = evolution::build_cauchy_jet(io::random_pair(s, s.lattice(8), {4}), bg);
  for (auto _ : state) benchmark::DoNotOptimize(evolution::evolve(jet, {10.0, 0.0, true, {}}));
}
BENCHMARK(BM_MinkowskiExact)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
