#include <benchmark/benchmark.h>

#include <archimedean/analyze.hpp>
#include <archimedean/operators.hpp>
#include <archimedean/realize.hpp>

using namespace archimedean;

static void BM_ambo_dodecahedron(benchmark::State& state) {
  const auto seed = platonic_seed("dodecahedron");
  for (auto _ : state) benchmark::DoNotOptimize(ambo(seed));
}
BENCHMARK(BM_ambo_dodecahedron);

static void BM_bevel_dodecahedron(benchmark::State& state) {
  const auto seed = platonic_seed("dodecahedron");
  for (auto _ : state) benchmark::DoNotOptimize(bevel(seed));
}
BENCHMARK(BM_bevel_dodecahedron);

static void BM_snub_dodecahedron(benchmark::State& state) {
  const auto seed = platonic_seed("dodecahedron");
  for (auto _ : state) benchmark::DoNotOptimize(snub(seed));
}
BENCHMARK(BM_snub_dodecahedron);

static void BM_analyze_bevel(benchmark::State& state) {
  const auto map = bevel(platonic_seed("dodecahedron"));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(map));
}
BENCHMARK(BM_analyze_bevel);

static void BM_realize_catalog(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& entry : reference_catalog()) {
      if (entry.is_family())
        benchmark::DoNotOptimize(realize(entry, 8));
      else
        benchmark::DoNotOptimize(realize(entry));
    }
  }
}
BENCHMARK(BM_realize_catalog);

BENCHMARK_MAIN();
