#include <benchmark/benchmark.h>

#include "rnnids/seqmodel/corpus.hpp"
#include "rnnids/seqmodel/lstm.hpp"

namespace {

using namespace rnnids::seqmodel;

void BM_Advance(benchmark::State& state) {
  const TokenCorpus corpus = encode_corpus(rnnids::to_bytes("abcdefghijklmnopqrstuvwxyz0123456789"));
  LstmConfig cfg;
  const LstmModel m = init_model(corpus.vocab, cfg, static_cast<std::size_t>(state.range(0)));
  LstmState s = m.zero_state();
  TokenId t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(advance(m, t, s));
    t = (t + 1) % static_cast<TokenId>(corpus.vocab.size());
  }
}
BENCHMARK(BM_Advance)->Arg(64)->Arg(200)->Arg(512);

// One window of forward and backward at sequence length 1, the default
// training step.
void BM_TrainStep(benchmark::State& state) {
  const TokenCorpus corpus = encode_corpus(rnnids::to_bytes("abcdefghijklmnopqrstuvwxyz"));
  LstmConfig cfg;
  LstmModel m = init_model(corpus.vocab, cfg, static_cast<std::size_t>(state.range(0)));
  const std::vector<TokenId> window{0, 1};
  for (auto _ : state) {
    const ForwardPass pass = forward(m, window, m.zero_state(), true);
    backward(m, pass).apply(m.params, 1e-3);
  }
}
BENCHMARK(BM_TrainStep)->Arg(64)->Arg(200);

}  // namespace
