#include <benchmark/benchmark.h>

#include "morsetile/catalog.hpp"
#include "morsetile/field.hpp"
#include "morsetile/handles.hpp"
#include "morsetile/surface.hpp"
#include "morsetile/tiling.hpp"
#include "morsetile/words.hpp"

using namespace morsetile;

static void BM_SubdivideTile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MorseTile t = critical_tile(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(subdivide_tile(t));
}
BENCHMARK(BM_SubdivideTile)->DenseRange(2, 5);

static void BM_SubdivideTiling(benchmark::State& state) {
  const MorseTiling t = shell_surface(catalog::torus7());
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subdivide_tiling(t, d));
}
BENCHMARK(BM_SubdivideTiling)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

static void BM_ShellSurface(benchmark::State& state) {
  const SimplicialComplex k = catalog::grid_torus(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(shell_surface(k));
  state.SetComplexityN(static_cast<int64_t>(k.maximal_simplices().size()));
}
BENCHMARK(BM_ShellSurface)->RangeMultiplier(2)->Range(4, 32)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_SearchShelling(benchmark::State& state) {
  const SimplicialComplex k = state.range(0) == 0 ? catalog::four_triangles() : catalog::octahedron();
  for (auto _ : state) benchmark::DoNotOptimize(search_shelling(k));
}
BENCHMARK(BM_SearchShelling)->Arg(0)->Arg(1);

static void BM_FieldAndMorseFunction(benchmark::State& state) {
  const MorseTiling t = shell_surface(catalog::grid_torus(static_cast<int>(state.range(0)), static_cast<int>(state.range(0))));
  for (auto _ : state) {
    const DiscreteVectorField w = compatible_field(t);
    benchmark::DoNotOptimize(morse_function(w));
  }
}
BENCHMARK(BM_FieldAndMorseFunction)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

static void BM_ValidateShelling(benchmark::State& state) {
  const MorseTiling t = handle_tiling(static_cast<int>(state.range(0)), HandleVariant::OneHandle);
  const MorseTiling s = subdivide_tiling(t, 1);
  for (auto _ : state) benchmark::DoNotOptimize(validate_shelling(s));
}
BENCHMARK(BM_ValidateShelling)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ReduceWord(benchmark::State& state) {
  std::string s;
  for (int i = 0; i < state.range(0); ++i) s += (i % 3 == 0) ? "uud" : "dud";
  const CyclicWord w(s);
  reduce_word(target_word());  // builds the six-letter tables once
  for (auto _ : state) benchmark::DoNotOptimize(reduce_word(w));
}
BENCHMARK(BM_ReduceWord)->RangeMultiplier(4)->Range(4, 256);
BENCHMARK_MAIN();
