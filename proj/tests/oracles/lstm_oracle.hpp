#pragma once

// Scalar re-statement of the LSTM language model: plain loops over the
// parameter tensors, no Eigen expressions, no caching.

#include <cmath>
#include <vector>

#include "rnnids/seqmodel/lstm.hpp"

namespace rnnids::oracle {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Mean cross-entropy of predicting tokens[t+1] from tokens[0..t], zero state.
inline double scalar_loss(const seqmodel::LstmModel& m, const std::vector<seqmodel::TokenId>& tokens) {
  const auto& p = m.params;
  const std::size_t layers = p.layers.size();
  std::vector<std::vector<double>> h(layers), c(layers);
  for (std::size_t l = 0; l < layers; ++l) {
    h[l].assign(p.layers[l].hidden_size(), 0.0);
    c[l].assign(p.layers[l].hidden_size(), 0.0);
  }
  double total = 0.0;
  for (std::size_t t = 0; t + 1 < tokens.size(); ++t) {
    std::vector<double> x(static_cast<std::size_t>(p.embedding.cols()));
    for (std::size_t k = 0; k < x.size(); ++k) x[k] = p.embedding(tokens[t], static_cast<Eigen::Index>(k));
    for (std::size_t l = 0; l < layers; ++l) {
      const auto& lp = p.layers[l];
      const std::size_t H = lp.hidden_size();
      std::vector<double> pre[4];
      for (std::size_t g = 0; g < 4; ++g) {
        pre[g].assign(H, 0.0);
        for (std::size_t r = 0; r < H; ++r) {
          double acc = lp.gates[g].bias(static_cast<Eigen::Index>(r));
          for (std::size_t k = 0; k < x.size(); ++k) {
            acc += lp.gates[g].input_weights(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) * x[k];
          }
          for (std::size_t k = 0; k < H; ++k) {
            acc += lp.gates[g].recurrent_weights(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) * h[l][k];
          }
          pre[g][r] = acc;
        }
      }
      std::vector<double> nh(H);
      for (std::size_t r = 0; r < H; ++r) {
        const double i = sigmoid(pre[seqmodel::kInputGate][r]);
        const double f = sigmoid(pre[seqmodel::kForgetGate][r]);
        const double z = std::tanh(pre[seqmodel::kCandidate][r]);
        const double o = sigmoid(pre[seqmodel::kOutputGate][r]);
        c[l][r] = f * c[l][r] + i * z;
        nh[r] = o * std::tanh(c[l][r]);
      }
      h[l] = nh;
      x = nh;
    }
    const std::size_t V = static_cast<std::size_t>(p.output_bias.size());
    std::vector<double> logits(V);
    double mx = -1e300;
    for (std::size_t v = 0; v < V; ++v) {
      double acc = p.output_bias(static_cast<Eigen::Index>(v));
      for (std::size_t k = 0; k < x.size(); ++k) acc += p.output_weights(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(k)) * x[k];
      logits[v] = acc;
      mx = std::max(mx, acc);
    }
    double z = 0.0;
    for (double lg : logits) z += std::exp(lg - mx);
    total += -(logits[tokens[t + 1]] - mx - std::log(z));
  }
  return total / static_cast<double>(tokens.size() - 1);
}

}  // namespace rnnids::oracle
