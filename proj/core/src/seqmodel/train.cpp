#include "rnnids/seqmodel/train.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "rnnids/error.hpp"

namespace rnnids::seqmodel {

namespace {

class AdamState {
 public:
  explicit AdamState(const ModelParams& shape)
      : first_(ModelParams::zeros_like(shape)),
        second_(ModelParams::zeros_like(shape)),
        dense_(ModelParams::zeros_like(shape)) {}

  // The dense buffer is reused across steps; allocating it per update
  // dominated the runtime on wide models.
  void step(ModelParams& params, const Gradient& sparse, double scale, double learning_rate) {
    for (auto t : dense_.tensors()) std::fill(t.begin(), t.end(), 0.0);
    sparse.apply(dense_, -scale);
    const ModelParams& grad = dense_;
    constexpr double kBeta1 = 0.9;
    constexpr double kBeta2 = 0.999;
    constexpr double kEps = 1e-8;
    ++t_;
    const double c1 = 1.0 - std::pow(kBeta1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(kBeta2, static_cast<double>(t_));
    auto p = params.tensors();
    auto g = grad.tensors();
    auto m = first_.tensors();
    auto v = second_.tensors();
    for (std::size_t k = 0; k < p.size(); ++k) {
      for (std::size_t i = 0; i < p[k].size(); ++i) {
        m[k][i] = kBeta1 * m[k][i] + (1.0 - kBeta1) * g[k][i];
        v[k][i] = kBeta2 * v[k][i] + (1.0 - kBeta2) * g[k][i] * g[k][i];
        p[k][i] -= learning_rate * (m[k][i] / c1) / (std::sqrt(v[k][i] / c2) + kEps);
      }
    }
  }

 private:
  ModelParams first_;
  ModelParams second_;
  ModelParams dense_;
  std::uint64_t t_ = 0;
};

void update(LstmModel& model, const Gradient& grad, std::size_t windows, AdamState* adam) {
  const auto& cfg = model.config;
  double scale = 1.0 / static_cast<double>(windows);
  if (cfg.grad_clip > 0.0) {
    const double norm = std::sqrt(grad.squared_norm()) * scale;
    if (norm > cfg.grad_clip) scale *= cfg.grad_clip / norm;
  }
  if (adam) {
    adam->step(model.params, grad, scale, cfg.learning_rate);
  } else {
    grad.apply(model.params, cfg.learning_rate * scale);
  }
}

}  // namespace

void train_more(LstmModel& model, const TokenCorpus& corpus, const EpochCallback& on_epoch) {
  const LstmConfig& cfg = model.config;
  cfg.validate();
  if (corpus.size() < 2) throw TooShort("training needs at least 2 tokens, got " + std::to_string(corpus.size()));
  const std::vector<TokenId> tokens = encode(model.vocab, corpus.bytes);
  const std::size_t steps = tokens.size() - 1;

  std::unique_ptr<AdamState> adam;
  if (cfg.optimizer == Optimizer::kAdam) adam = std::make_unique<AdamState>(model.params);

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    LstmState state = model.zero_state();
    double total = 0.0;
    Gradient pending;
    std::size_t pending_windows = 0;
    for (std::size_t start = 0; start < steps; start += cfg.sequence_length) {
      const std::size_t len = std::min(cfg.sequence_length, steps - start);
      std::span<const TokenId> window(tokens.data() + start, len + 1);
      ForwardPass pass = forward(model, window, state, true);
      if (!std::isfinite(pass.loss)) {
        throw TrainingDiverged(epoch, "loss became non-finite in epoch " + std::to_string(epoch));
      }
      total += pass.loss * static_cast<double>(pass.steps);
      pending.append(backward(model, pass));
      ++pending_windows;
      state = std::move(pass.final_state);
      if (pending_windows == cfg.batch_size || start + len >= steps) {
        update(model, pending, pending_windows, adam.get());
        pending = Gradient{};
        pending_windows = 0;
      }
    }
    const double mean = total / static_cast<double>(steps);
    if (!std::isfinite(mean)) throw TrainingDiverged(epoch, "loss became non-finite in epoch " + std::to_string(epoch));
    model.loss_trace.push_back(mean);
    if (on_epoch) on_epoch(epoch, mean);
  }
}

LstmModel train(const TokenCorpus& corpus, const LstmConfig& config, const EpochCallback& on_epoch) {
  config.validate();
  if (corpus.size() < 2) throw TooShort("training needs at least 2 tokens, got " + std::to_string(corpus.size()));
  LstmModel model = init_model(corpus.vocab, config, resolve_hidden_size(config, corpus.size()));
  train_more(model, corpus, on_epoch);
  return model;
}

}  // namespace rnnids::seqmodel
