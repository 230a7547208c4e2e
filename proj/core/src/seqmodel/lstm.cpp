#include "rnnids/seqmodel/lstm.hpp"

#include <cmath>
#include <map>
#include <string>

#include "rnnids/error.hpp"
#include "rnnids/rng.hpp"

namespace rnnids::seqmodel {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void LstmConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InvalidConfig(what);
  };
  require(batch_size >= 1, "batch_size must be >= 1");
  require(epochs >= 1, "epochs must be >= 1");
  require(num_hidden_layers >= 1, "num_hidden_layers must be >= 1");
  require(embedding_size >= 1, "embedding_size must be >= 1");
  require(sequence_length >= 1, "sequence_length must be >= 1");
  require(hidden_cap >= 1, "hidden_cap must be >= 1");
  require(std::isfinite(learning_rate) && learning_rate > 0.0, "learning_rate must be finite and > 0");
  require(std::isfinite(temperature) && temperature > 0.0, "temperature must be > 0");
  require(std::isfinite(grad_clip) && grad_clip >= 0.0, "grad_clip must be >= 0");
}

std::size_t resolve_hidden_size(const LstmConfig& config, std::size_t corpus_length) {
  if (config.hidden_size > 0) return config.hidden_size;
  return std::max<std::size_t>(1, std::min(corpus_length, config.hidden_cap));
}

LstmLayerParams LstmLayerParams::zeros(std::size_t input_size, std::size_t hidden_size) {
  LstmLayerParams p;
  const auto in = static_cast<Eigen::Index>(input_size);
  const auto hid = static_cast<Eigen::Index>(hidden_size);
  for (auto& g : p.gates) {
    g.input_weights = MatrixXd::Zero(hid, in);
    g.recurrent_weights = MatrixXd::Zero(hid, hid);
    g.bias = VectorXd::Zero(hid);
  }
  return p;
}

namespace {

VectorXd sigmoid(const VectorXd& x) { return (1.0 + (-x.array()).exp()).inverse().matrix(); }

VectorXd gate_preactivation(const GateParams& g, const VectorXd& x, const VectorXd& h_prev) {
  VectorXd a = g.bias;
  a.noalias() += g.input_weights * x;
  a.noalias() += g.recurrent_weights * h_prev;
  return a;
}

std::span<double> span_of(MatrixXd& m) { return {m.data(), static_cast<std::size_t>(m.size())}; }
std::span<double> span_of(VectorXd& v) { return {v.data(), static_cast<std::size_t>(v.size())}; }

}  // namespace

CellActivations cell_forward(const LstmLayerParams& params, const VectorXd& x, const VectorXd& h_prev,
                             const VectorXd& c_prev) {
  const auto hid = params.gates[0].input_weights.rows();
  const auto in = params.gates[0].input_weights.cols();
  for (const auto& g : params.gates) {
    if (g.input_weights.rows() != hid || g.input_weights.cols() != in || g.recurrent_weights.rows() != hid ||
        g.recurrent_weights.cols() != hid || g.bias.size() != hid) {
      throw ShapeError("inconsistent gate parameter shapes");
    }
  }
  if (x.size() != in) {
    throw ShapeError("input has " + std::to_string(x.size()) + " components, layer expects " + std::to_string(in));
  }
  if (h_prev.size() != hid || c_prev.size() != hid) {
    throw ShapeError("state width does not match hidden size " + std::to_string(hid));
  }

  CellActivations a;
  a.input_gate = sigmoid(gate_preactivation(params.gates[kInputGate], x, h_prev));
  a.forget_gate = sigmoid(gate_preactivation(params.gates[kForgetGate], x, h_prev));
  a.output_gate = sigmoid(gate_preactivation(params.gates[kOutputGate], x, h_prev));
  a.candidate = gate_preactivation(params.gates[kCandidate], x, h_prev).array().tanh().matrix();
  a.c = a.forget_gate.cwiseProduct(c_prev) + a.input_gate.cwiseProduct(a.candidate);
  a.tanh_c = a.c.array().tanh().matrix();
  a.h = a.output_gate.cwiseProduct(a.tanh_c);
  return a;
}

std::pair<VectorXd, VectorXd> lstm_cell_step(const LstmLayerParams& params, const VectorXd& x,
                                             const VectorXd& h_prev, const VectorXd& c_prev) {
  auto a = cell_forward(params, x, h_prev, c_prev);
  return {std::move(a.h), std::move(a.c)};
}

std::vector<std::span<double>> ModelParams::tensors() {
  std::vector<std::span<double>> out;
  out.push_back(span_of(embedding));
  for (auto& layer : layers) {
    for (auto& g : layer.gates) {
      out.push_back(span_of(g.input_weights));
      out.push_back(span_of(g.recurrent_weights));
      out.push_back(span_of(g.bias));
    }
  }
  out.push_back(span_of(output_weights));
  out.push_back(span_of(output_bias));
  return out;
}

std::vector<std::span<const double>> ModelParams::tensors() const {
  auto mutable_views = const_cast<ModelParams*>(this)->tensors();
  return {mutable_views.begin(), mutable_views.end()};
}

std::size_t ModelParams::parameter_count() const {
  std::size_t n = 0;
  for (auto t : tensors()) n += t.size();
  return n;
}

ModelParams ModelParams::zeros_like(const ModelParams& shape) {
  ModelParams z;
  z.embedding = MatrixXd::Zero(shape.embedding.rows(), shape.embedding.cols());
  for (const auto& layer : shape.layers) z.layers.push_back(LstmLayerParams::zeros(layer.input_size(), layer.hidden_size()));
  z.output_weights = MatrixXd::Zero(shape.output_weights.rows(), shape.output_weights.cols());
  z.output_bias = VectorXd::Zero(shape.output_bias.size());
  return z;
}

LstmState LstmModel::zero_state() const {
  LstmState s;
  for (const auto& layer : params.layers) {
    s.h.push_back(VectorXd::Zero(static_cast<Eigen::Index>(layer.hidden_size())));
    s.c.push_back(VectorXd::Zero(static_cast<Eigen::Index>(layer.hidden_size())));
  }
  return s;
}

void LstmModel::validate() const {
  const auto v = static_cast<Eigen::Index>(vocab.size());
  if (params.layers.empty()) throw ShapeError("model has no layers");
  if (params.embedding.rows() != v) throw ShapeError("embedding rows != vocabulary size");
  if (static_cast<std::size_t>(params.embedding.cols()) != params.layers[0].input_size()) {
    throw ShapeError("layer 0 input width != embedding size");
  }
  for (std::size_t k = 1; k < params.layers.size(); ++k) {
    if (params.layers[k].input_size() != params.layers[k - 1].hidden_size()) {
      throw ShapeError("layer " + std::to_string(k) + " input width != hidden size of layer below");
    }
  }
  if (params.output_weights.rows() != v || params.output_bias.size() != v) {
    throw ShapeError("output projection rows != vocabulary size");
  }
  if (static_cast<std::size_t>(params.output_weights.cols()) != params.layers.back().hidden_size()) {
    throw ShapeError("output projection width != top hidden size");
  }
  for (auto t : params.tensors()) {
    for (double x : t) {
      if (!std::isfinite(x)) throw ShapeError("non-finite parameter");
    }
  }
}

LstmModel init_model(const Vocab& vocab, const LstmConfig& config, std::size_t hidden_size) {
  config.validate();
  if (vocab.size() == 0) throw EmptyCorpus("cannot build a model over an empty vocabulary");
  if (hidden_size == 0) throw InvalidConfig("hidden_size must be >= 1");
  LstmModel m;
  m.vocab = vocab;
  m.config = config;
  m.config.hidden_size = hidden_size;
  const auto v = static_cast<Eigen::Index>(vocab.size());
  const auto hid = static_cast<Eigen::Index>(hidden_size);
  m.params.embedding = MatrixXd::Zero(v, static_cast<Eigen::Index>(config.embedding_size));
  std::size_t input = config.embedding_size;
  for (std::size_t k = 0; k < config.num_hidden_layers; ++k) {
    m.params.layers.push_back(LstmLayerParams::zeros(input, hidden_size));
    input = hidden_size;
  }
  m.params.output_weights = MatrixXd::Zero(v, hid);
  m.params.output_bias = VectorXd::Zero(v);

  Rng rng(config.rng_seed);
  for (auto t : m.params.tensors()) {
    for (double& x : t) x = rng.uniform(-0.08, 0.08);
  }
  for (auto& layer : m.params.layers) layer.gates[kForgetGate].bias.setConstant(1.0);
  return m;
}

VectorXd advance(const LstmModel& model, TokenId token, LstmState& state) {
  if (token >= model.vocab_size()) throw UnknownToken("token id out of range");
  VectorXd input = model.params.embedding.row(token).transpose();
  for (std::size_t l = 0; l < model.num_layers(); ++l) {
    auto acts = cell_forward(model.params.layers[l], input, state.h[l], state.c[l]);
    state.c[l] = std::move(acts.c);
    state.h[l] = std::move(acts.h);
    input = state.h[l];
  }
  VectorXd logits = model.params.output_bias;
  logits.noalias() += model.params.output_weights * input;
  return logits;
}

namespace {

// log-softmax(logits)[target] and, optionally, the full softmax.
double log_prob(const VectorXd& logits, TokenId target, VectorXd* probs) {
  const double max = logits.maxCoeff();
  VectorXd e = (logits.array() - max).exp().matrix();
  const double sum = e.sum();
  if (probs) *probs = e / sum;
  return logits[target] - max - std::log(sum);
}

}  // namespace

ForwardPass forward(const LstmModel& model, std::span<const TokenId> tokens, const LstmState& initial,
                    bool keep_cache) {
  if (tokens.size() < 2) throw TooShort("need at least 2 tokens, got " + std::to_string(tokens.size()));
  ForwardPass pass;
  pass.steps = tokens.size() - 1;
  pass.final_state = initial;
  LstmState& state = pass.final_state;
  if (keep_cache) pass.cache.reserve(pass.steps);

  double total = 0.0;
  for (std::size_t t = 0; t < pass.steps; ++t) {
    const TokenId in = tokens[t];
    const TokenId target = tokens[t + 1];
    if (in >= model.vocab_size() || target >= model.vocab_size()) throw UnknownToken("token id out of range");
    StepCache step;
    VectorXd input = model.params.embedding.row(in).transpose();
    for (std::size_t l = 0; l < model.num_layers(); ++l) {
      auto acts = cell_forward(model.params.layers[l], input, state.h[l], state.c[l]);
      if (keep_cache) {
        step.layer_input.push_back(input);
        step.h_prev.push_back(state.h[l]);
        step.c_prev.push_back(state.c[l]);
      }
      state.h[l] = acts.h;
      state.c[l] = acts.c;
      input = acts.h;
      if (keep_cache) step.acts.push_back(std::move(acts));
    }
    VectorXd logits = model.params.output_bias;
    logits.noalias() += model.params.output_weights * input;
    total -= log_prob(logits, target, keep_cache ? &step.probs : nullptr);
    if (keep_cache) {
      step.input = in;
      step.target = target;
      pass.cache.push_back(std::move(step));
    }
  }
  pass.loss = total / static_cast<double>(pass.steps);
  return pass;
}

ForwardPass forward_loss(const LstmModel& model, const TokenCorpus& corpus, bool keep_cache) {
  return forward(model, corpus.tokens, model.zero_state(), keep_cache);
}

Gradient backward(const LstmModel& model, const ForwardPass& pass) {
  if (pass.cache.size() != pass.steps || pass.steps == 0) {
    throw ShapeError("backward requires a forward pass with caches");
  }
  const std::size_t num_layers = model.num_layers();
  const double scale = 1.0 / static_cast<double>(pass.steps);
  const auto& p = model.params;

  Gradient grad;
  grad.layers.resize(num_layers);
  std::vector<VectorXd> dh_next(num_layers), dc_next(num_layers);
  for (std::size_t l = 0; l < num_layers; ++l) {
    dh_next[l] = VectorXd::Zero(static_cast<Eigen::Index>(p.layers[l].hidden_size()));
    dc_next[l] = dh_next[l];
  }

  for (std::size_t t = pass.steps; t-- > 0;) {
    const StepCache& step = pass.cache[t];
    VectorXd dlogits = step.probs;
    dlogits[step.target] -= 1.0;
    dlogits *= scale;

    VectorXd dh = p.output_weights.transpose() * dlogits;
    grad.output_deltas.push_back(dlogits);
    grad.top_hidden.push_back(step.acts.back().h);

    for (std::size_t l = num_layers; l-- > 0;) {
      const CellActivations& a = step.acts[l];
      const LstmLayerParams& layer = p.layers[l];
      dh += dh_next[l];

      const VectorXd d_output = dh.cwiseProduct(a.tanh_c);
      VectorXd dc = dc_next[l] + dh.cwiseProduct(a.output_gate).cwiseProduct(
                                     (1.0 - a.tanh_c.array().square()).matrix());
      const VectorXd d_input = dc.cwiseProduct(a.candidate);
      const VectorXd d_forget = dc.cwiseProduct(step.c_prev[l]);
      const VectorXd d_candidate = dc.cwiseProduct(a.input_gate);
      dc_next[l] = dc.cwiseProduct(a.forget_gate);

      std::array<VectorXd, kNumGates> da;
      da[kInputGate] = (d_input.array() * a.input_gate.array() * (1.0 - a.input_gate.array())).matrix();
      da[kForgetGate] = (d_forget.array() * a.forget_gate.array() * (1.0 - a.forget_gate.array())).matrix();
      da[kOutputGate] = (d_output.array() * a.output_gate.array() * (1.0 - a.output_gate.array())).matrix();
      da[kCandidate] = (d_candidate.array() * (1.0 - a.candidate.array().square())).matrix();

      VectorXd dx = VectorXd::Zero(static_cast<Eigen::Index>(layer.input_size()));
      VectorXd dh_prev = VectorXd::Zero(static_cast<Eigen::Index>(layer.hidden_size()));
      for (std::size_t g = 0; g < kNumGates; ++g) {
        dx.noalias() += layer.gates[g].input_weights.transpose() * da[g];
        dh_prev.noalias() += layer.gates[g].recurrent_weights.transpose() * da[g];
      }
      dh_next[l] = std::move(dh_prev);

      auto& terms = grad.layers[l];
      terms.pre_activation.push_back(std::move(da));
      terms.inputs.push_back(step.layer_input[l]);
      terms.prev_hidden.push_back(step.h_prev[l]);
      dh = std::move(dx);
    }
    grad.embedding_rows.emplace_back(step.input, std::move(dh));
  }
  return grad;
}

namespace {

MatrixXd stack(const std::vector<VectorXd>& columns) {
  MatrixXd m(columns.front().size(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < columns.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = columns[i];
  return m;
}

MatrixXd stack_gate(const std::vector<std::array<VectorXd, kNumGates>>& terms, std::size_t gate) {
  MatrixXd m(terms.front()[gate].size(), static_cast<Eigen::Index>(terms.size()));
  for (std::size_t i = 0; i < terms.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = terms[i][gate];
  return m;
}

// ||A B^T||_F^2 computed through the Gram matrices.
double outer_sum_norm2(const MatrixXd& a, const MatrixXd& b) {
  const MatrixXd ga = a.transpose() * a;
  const MatrixXd gb = b.transpose() * b;
  return ga.cwiseProduct(gb).sum();
}

void subtract_outer_sum(MatrixXd& target, const MatrixXd& a, const MatrixXd& b, double step) {
  if (a.cols() == 1) {
    target.noalias() -= (step * a.col(0)) * b.col(0).transpose();
  } else {
    target.noalias() -= (step * a) * b.transpose();
  }
}

std::map<TokenId, VectorXd> embedding_by_row(const std::vector<std::pair<TokenId, VectorXd>>& rows) {
  std::map<TokenId, VectorXd> by_row;
  for (const auto& [token, g] : rows) {
    auto [it, inserted] = by_row.try_emplace(token, g);
    if (!inserted) it->second += g;
  }
  return by_row;
}

}  // namespace

double Gradient::squared_norm() const {
  if (empty()) return 0.0;
  double total = 0.0;
  for (const auto& terms : layers) {
    const MatrixXd x = stack(terms.inputs);
    const MatrixXd h = stack(terms.prev_hidden);
    for (std::size_t g = 0; g < kNumGates; ++g) {
      const MatrixXd a = stack_gate(terms.pre_activation, g);
      total += outer_sum_norm2(a, x);
      total += outer_sum_norm2(a, h);
      total += a.rowwise().sum().squaredNorm();
    }
  }
  const MatrixXd d = stack(output_deltas);
  total += outer_sum_norm2(d, stack(top_hidden));
  total += d.rowwise().sum().squaredNorm();
  for (const auto& [token, g] : embedding_by_row(embedding_rows)) total += g.squaredNorm();
  return total;
}

ModelParams Gradient::to_dense(const ModelParams& shape) const {
  ModelParams dense = ModelParams::zeros_like(shape);
  apply(dense, -1.0);
  return dense;
}

void Gradient::apply(ModelParams& params, double step) const {
  if (empty()) return;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const auto& terms = layers[l];
    const MatrixXd x = stack(terms.inputs);
    const MatrixXd h = stack(terms.prev_hidden);
    for (std::size_t g = 0; g < kNumGates; ++g) {
      const MatrixXd a = stack_gate(terms.pre_activation, g);
      auto& gate = params.layers[l].gates[g];
      subtract_outer_sum(gate.input_weights, a, x, step);
      subtract_outer_sum(gate.recurrent_weights, a, h, step);
      gate.bias.noalias() -= step * a.rowwise().sum();
    }
  }
  const MatrixXd d = stack(output_deltas);
  subtract_outer_sum(params.output_weights, d, stack(top_hidden), step);
  params.output_bias.noalias() -= step * d.rowwise().sum();
  for (const auto& [token, g] : embedding_rows) {
    params.embedding.row(token).noalias() -= step * g.transpose();
  }
}

void Gradient::append(Gradient&& other) {
  if (other.empty()) return;
  if (empty()) {
    *this = std::move(other);
    return;
  }
  auto move_into = [](auto& dst, auto& src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
  };
  for (std::size_t l = 0; l < layers.size(); ++l) {
    move_into(layers[l].pre_activation, other.layers[l].pre_activation);
    move_into(layers[l].inputs, other.layers[l].inputs);
    move_into(layers[l].prev_hidden, other.layers[l].prev_hidden);
  }
  move_into(output_deltas, other.output_deltas);
  move_into(top_hidden, other.top_hidden);
  move_into(embedding_rows, other.embedding_rows);
}

}  // namespace rnnids::seqmodel
