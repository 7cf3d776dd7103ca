#include <benchmark/benchmark.h>

#include <random>

#include "spreadbound/bigraph.hpp"

namespace sb = spreadbound;

namespace {

sb::DegreePair random_pair(int n) {
  std::mt19937_64 eng(42);
  std::uniform_int_distribution<int> deg(0, n);
  std::vector<int> a(static_cast<std::size_t>(n));
  std::vector<int> b(static_cast<std::size_t>(n));
  for (auto& x : a) x = deg(eng);
  for (auto& x : b) x = deg(eng);
  return sb::DegreePair::from_unsorted(n, a, b);
}

void BM_CountHighDiff(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto dp = random_pair(n);
  for (auto _ : state) benchmark::DoNotOptimize(sb::count_high_diff(dp, n / 2 + 1));
  state.SetComplexityN(n);
}
BENCHMARK(BM_CountHighDiff)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_LemmaWitness(benchmark::State& state) {
  const auto g = sb::make_extremal(64, 40);
  const auto dp = sb::degree_pair(sb::complement(g));
  for (auto _ : state) benchmark::DoNotOptimize(sb::lemma_witness(dp, 40));
}
BENCHMARK(BM_LemmaWitness);

}  // namespace
