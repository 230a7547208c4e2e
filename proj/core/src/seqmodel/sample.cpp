#include <cmath>

#include "rnnids/error.hpp"
#include "rnnids/rng.hpp"
#include "rnnids/seqmodel/train.hpp"

namespace rnnids::seqmodel {

Bytes sample(const LstmModel& model, ByteView seed, std::size_t length, double temperature,
             std::uint64_t rng_seed) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) throw InvalidConfig("temperature must be > 0");
  if (length == 0) throw InvalidConfig("sample length must be >= 1");
  if (seed.empty()) throw InvalidConfig("sampling needs at least one seed octet");
  const std::vector<TokenId> primed = encode(model.vocab, seed);

  LstmState state = model.zero_state();
  Eigen::VectorXd logits;
  for (TokenId t : primed) logits = advance(model, t, state);

  Rng rng(rng_seed);
  Bytes out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const Eigen::ArrayXd scaled = logits.array() / temperature;
    const Eigen::ArrayXd weights = (scaled - scaled.maxCoeff()).exp();
    const double u = rng.uniform() * weights.sum();
    TokenId next = static_cast<TokenId>(weights.size() - 1);
    double acc = 0.0;
    for (Eigen::Index k = 0; k < weights.size(); ++k) {
      acc += weights[k];
      if (u < acc) {
        next = static_cast<TokenId>(k);
        break;
      }
    }
    out.push_back(model.vocab.octet(next));
    if (i + 1 < length) logits = advance(model, next, state);
  }
  return out;
}

}  // namespace rnnids::seqmodel
