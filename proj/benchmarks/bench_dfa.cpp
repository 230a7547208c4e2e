#include <benchmark/benchmark.h>

#include "rnnids/rng.hpp"
#include "rnnids/signatures/dfa.hpp"
#include "rnnids/signatures/generate.hpp"
#include "rnnids/signatures/regex_parser.hpp"

namespace {

using namespace rnnids::signatures;

const char* kPattern = "^[ \\t]*(GET|HEAD|POST|PUT|DELETE|OPTIONS) [^ ]* HTTP\\/1\\.[01]";

void BM_Compile(benchmark::State& state) {
  const auto ast = parse_regex(kPattern);
  for (auto _ : state) benchmark::DoNotOptimize(compile(ast));
}
BENCHMARK(BM_Compile);

// Unanchored search over a payload that never matches: the worst case.
void BM_MatchNoHit(benchmark::State& state) {
  const Dfa dfa = compile(parse_regex("\\/default\\.ida\\?[NX]{32,}"));
  rnnids::Rng rng(9);
  rnnids::Bytes payload(static_cast<std::size_t>(state.range(0)));
  for (auto& x : payload) x = static_cast<std::uint8_t>(rng.below(256));
  for (auto _ : state) benchmark::DoNotOptimize(dfa.matches(payload));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_MatchNoHit)->Range(64, 64 << 10);

void BM_Generate(benchmark::State& state) {
  const auto ast = parse_regex(kPattern);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_matching(ast, seed++));
}
BENCHMARK(BM_Generate);

}  // namespace
