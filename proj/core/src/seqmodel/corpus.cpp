#include "rnnids/seqmodel/corpus.hpp"

#include "rnnids/error.hpp"

namespace rnnids::seqmodel {

Vocab Vocab::from_octets(const Bytes& octets_in_id_order) {
  Vocab v;
  for (auto o : octets_in_id_order) {
    if (v.contains(o)) throw ModelFormatError("duplicate octet in vocabulary");
    v.add(o);
  }
  return v;
}

std::optional<TokenId> Vocab::find(std::uint8_t octet) const {
  if (index_[octet] < 0) return std::nullopt;
  return static_cast<TokenId>(index_[octet]);
}

TokenId Vocab::id(std::uint8_t octet) const {
  if (index_[octet] < 0) {
    throw UnknownToken("octet 0x" + to_hex(ByteView(&octet, 1)) + " is not in the vocabulary");
  }
  return static_cast<TokenId>(index_[octet]);
}

TokenId Vocab::add(std::uint8_t octet) {
  if (index_[octet] < 0) {
    index_[octet] = static_cast<int>(octets_.size());
    octets_.push_back(octet);
  }
  return static_cast<TokenId>(index_[octet]);
}

TokenCorpus encode_corpus(const Bytes& raw, std::string name) {
  if (raw.empty()) throw EmptyCorpus("corpus '" + name + "' is empty");
  TokenCorpus corpus;
  corpus.name = std::move(name);
  corpus.bytes = raw;
  corpus.tokens.reserve(raw.size());
  for (auto b : raw) corpus.tokens.push_back(corpus.vocab.add(b));
  return corpus;
}

std::vector<TokenId> encode(const Vocab& vocab, ByteView octets) {
  std::vector<TokenId> out;
  out.reserve(octets.size());
  for (auto b : octets) out.push_back(vocab.id(b));
  return out;
}

Bytes decode(const Vocab& vocab, const std::vector<TokenId>& tokens) {
  Bytes out;
  out.reserve(tokens.size());
  for (auto t : tokens) out.push_back(vocab.octet(t));
  return out;
}

}  // namespace rnnids::seqmodel
