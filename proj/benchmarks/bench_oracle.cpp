#include <benchmark/benchmark.h>

#include <archimedean/counts.hpp>
#include <archimedean/oracle.hpp>
#include <archimedean/vertex_figure.hpp>

using namespace archimedean;

static void BM_canonical_cycle(benchmark::State& state) {
  const std::vector<int> seq = {8, 3, 5, 4, 3, 6, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(canonical_cycle(seq));
}
BENCHMARK(BM_canonical_cycle);

static void BM_counts(benchmark::State& state) {
  const VertexFigure fig{3, 4, 5, 4};
  for (auto _ : state) benchmark::DoNotOptimize(counts(fig));
}
BENCHMARK(BM_counts);

static void BM_oracle_enumerate(benchmark::State& state) {
  const int p_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_enumerate(p_max));
}
BENCHMARK(BM_oracle_enumerate)->Arg(12)->Arg(20)->Arg(30);

static void BM_oracle_diff(benchmark::State& state) {
  const int p_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_diff(p_max));
}
BENCHMARK(BM_oracle_diff)->Arg(12)->Arg(20);

BENCHMARK_MAIN();
