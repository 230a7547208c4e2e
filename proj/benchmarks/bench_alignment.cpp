#include <benchmark/benchmark.h>

#include "rnnids/rng.hpp"
#include "rnnids/simmetrics/alignment.hpp"

namespace {

rnnids::Bytes random_bytes(std::size_t n, std::uint64_t seed) {
  rnnids::Rng rng(seed);
  rnnids::Bytes b(n);
  for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(16));
  return b;
}

void BM_SmithWaterman(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_bytes(n, 1), b = random_bytes(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rnnids::simmetrics::smith_waterman(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SmithWaterman)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

void BM_Levenshtein(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_bytes(n, 3), b = random_bytes(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rnnids::simmetrics::levenshtein_distance(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Levenshtein)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);

}  // namespace
