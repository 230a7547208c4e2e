#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rnnids/seqmodel/corpus.hpp"

namespace rnnids::seqmodel {

enum class Optimizer : std::uint8_t { kSgd = 0, kAdam = 1 };

// Training and sampling configuration. Defaults: batch 1, learning rate
// 0.001, 100 epochs, two hidden layers, 64-wide embeddings and a sequence
// length of 1.
struct LstmConfig {
  std::size_t batch_size = 1;
  double learning_rate = 0.001;
  std::size_t epochs = 100;
  std::size_t num_hidden_layers = 2;
  std::size_t embedding_size = 64;
  // Truncated-BPTT window; parameters are updated after every window.
  std::size_t sequence_length = 1;
  // 0 derives the width from the corpus length, capped at `hidden_cap`.
  std::size_t hidden_size = 0;
  std::size_t hidden_cap = 512;
  std::uint64_t rng_seed = 0;
  double temperature = 1.0;
  // Global gradient-norm clip; 0 disables clipping.
  double grad_clip = 5.0;
  // Plain SGD at the default rate cannot memorise even a short corpus in
  // 100 epochs, so Adam is the default.
  Optimizer optimizer = Optimizer::kAdam;

  // Throws InvalidConfig.
  void validate() const;
};

std::size_t resolve_hidden_size(const LstmConfig& config, std::size_t corpus_length);

enum Gate : std::size_t { kInputGate = 0, kForgetGate = 1, kCandidate = 2, kOutputGate = 3 };
inline constexpr std::size_t kNumGates = 4;

struct GateParams {
  Eigen::MatrixXd input_weights;      // hidden x input
  Eigen::MatrixXd recurrent_weights;  // hidden x hidden
  Eigen::VectorXd bias;               // hidden
};

struct LstmLayerParams {
  std::array<GateParams, kNumGates> gates;

  static LstmLayerParams zeros(std::size_t input_size, std::size_t hidden_size);
  std::size_t input_size() const { return static_cast<std::size_t>(gates[0].input_weights.cols()); }
  std::size_t hidden_size() const { return static_cast<std::size_t>(gates[0].input_weights.rows()); }
};

struct LstmState {
  std::vector<Eigen::VectorXd> h;
  std::vector<Eigen::VectorXd> c;
};

// Every intermediate of one cell step; the backward pass reads these.
struct CellActivations {
  Eigen::VectorXd input_gate;
  Eigen::VectorXd forget_gate;
  Eigen::VectorXd candidate;
  Eigen::VectorXd output_gate;
  Eigen::VectorXd c;
  Eigen::VectorXd tanh_c;
  Eigen::VectorXd h;
};

// Throws ShapeError on inconsistent shapes.
CellActivations cell_forward(const LstmLayerParams& params, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& h_prev, const Eigen::VectorXd& c_prev);

// Returns (h, c).
std::pair<Eigen::VectorXd, Eigen::VectorXd> lstm_cell_step(const LstmLayerParams& params,
                                                            const Eigen::VectorXd& x,
                                                            const Eigen::VectorXd& h_prev,
                                                            const Eigen::VectorXd& c_prev);

struct ModelParams {
  Eigen::MatrixXd embedding;  // vocab x embedding_size, one row per token
  std::vector<LstmLayerParams> layers;
  Eigen::MatrixXd output_weights;  // vocab x top hidden
  Eigen::VectorXd output_bias;     // vocab

  // Traversal order shared by persistence, optimisers and gradient checks:
  // embedding; per layer and gate (input, forget, candidate, output) the
  // input weights, recurrent weights and bias; output weights; output bias.
  std::vector<std::span<double>> tensors();
  std::vector<std::span<const double>> tensors() const;
  std::size_t parameter_count() const;

  static ModelParams zeros_like(const ModelParams& shape);
};

struct LstmModel {
  Vocab vocab;
  LstmConfig config;
  ModelParams params;
  std::vector<double> loss_trace;

  std::size_t vocab_size() const { return vocab.size(); }
  std::size_t num_layers() const { return params.layers.size(); }
  std::size_t hidden_size() const { return params.layers.empty() ? 0 : params.layers.back().hidden_size(); }

  LstmState zero_state() const;
  // Checks the topology invariants; throws ShapeError.
  void validate() const;
};

// Uniform [-0.08, 0.08] initialisation with forget-gate biases set to 1.
LstmModel init_model(const Vocab& vocab, const LstmConfig& config, std::size_t hidden_size);

// Feeds one token through every layer, updating `state`; returns the logits.
Eigen::VectorXd advance(const LstmModel& model, TokenId token, LstmState& state);

struct StepCache {
  TokenId input = 0;
  TokenId target = 0;
  std::vector<Eigen::VectorXd> layer_input;
  std::vector<Eigen::VectorXd> h_prev;
  std::vector<Eigen::VectorXd> c_prev;
  std::vector<CellActivations> acts;
  Eigen::VectorXd probs;
};

struct ForwardPass {
  double loss = 0.0;  // mean next-token cross-entropy
  std::size_t steps = 0;
  std::vector<StepCache> cache;  // empty unless requested
  LstmState final_state;
};

// Predicts tokens[t+1] from tokens[..t] for every t, starting from `initial`.
// Throws TooShort for fewer than two tokens.
ForwardPass forward(const LstmModel& model, std::span<const TokenId> tokens, const LstmState& initial,
                    bool keep_cache);

// Whole-corpus loss from a zero state, with caches for backpropagation.
ForwardPass forward_loss(const LstmModel& model, const TokenCorpus& corpus, bool keep_cache = true);

// Gradient of a window's mean loss, held as sums of outer products so that
// plain SGD can apply it without materialising dense matrices.
struct Gradient {
  struct LayerTerms {
    std::vector<std::array<Eigen::VectorXd, kNumGates>> pre_activation;
    std::vector<Eigen::VectorXd> inputs;
    std::vector<Eigen::VectorXd> prev_hidden;
  };
  std::vector<LayerTerms> layers;
  std::vector<Eigen::VectorXd> output_deltas;
  std::vector<Eigen::VectorXd> top_hidden;
  std::vector<std::pair<TokenId, Eigen::VectorXd>> embedding_rows;

  double squared_norm() const;
  ModelParams to_dense(const ModelParams& shape) const;
  // params -= step * gradient
  void apply(ModelParams& params, double step) const;
  void append(Gradient&& other);
  bool empty() const { return output_deltas.empty(); }
};

// Backpropagation through every step of `pass` (which must hold caches).
Gradient backward(const LstmModel& model, const ForwardPass& pass);

}  // namespace rnnids::seqmodel
