#include <benchmark/benchmark.h>

#include "houghton/metric.hpp"
#include "houghton/morphisms.hpp"
#include "houghton/words.hpp"

using namespace houghton;

static void BM_Compose(benchmark::State& state) {
  const auto budget = state.range(0);
  const Element a = random_element(4, budget, 1);
  const Element b = random_element(4, budget, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Compose)->Arg(10)->Arg(100)->Arg(1000);

static void BM_BallGij3(benchmark::State& state) {
  const GeneratingSet gens = GeneratingSet::make(GeneratingSetKind::kGij, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_ball(3, gens, static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_BallGij3)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_Synthesize(benchmark::State& state) {
  const Element e = random_element(3, state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_word(e).word.size());
  state.counters["P"] = static_cast<double>(complexity(e).total);
}
BENCHMARK(BM_Synthesize)->Arg(50)->Arg(300)->Arg(3000)->Unit(benchmark::kMicrosecond);

static void BM_ExactLengthH2(benchmark::State& state) {
  const GeneratingSet h2 = GeneratingSet::make(GeneratingSetKind::kH2, 2);
  const Element s = sigma_n(2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_length(s, h2, 16));
}
BENCHMARK(BM_ExactLengthH2)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_UpIndex(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(up_index(4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UpIndex)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
