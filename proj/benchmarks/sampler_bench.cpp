#include <benchmark/benchmark.h>

#include "spreadbound/coherent.hpp"
#include "spreadbound/sampler.hpp"

namespace sb = spreadbound;

namespace {

void BM_SampleGraph(benchmark::State& state) {
  const auto m = sb::extremal_model(200, 110);
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sb::sample_graph(m, n, ++seed));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * n);
}
BENCHMARK(BM_SampleGraph)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

void BM_Spread(benchmark::State& state) {
  const auto m = sb::random_model(7, {12, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(sb::spread(m, 0.6));
}
BENCHMARK(BM_Spread);

}  // namespace

BENCHMARK_MAIN();
