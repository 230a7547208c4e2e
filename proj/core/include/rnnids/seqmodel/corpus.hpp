#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rnnids/bytes.hpp"

namespace rnnids::seqmodel {

using TokenId = std::uint32_t;

// Bijection between the octets observed in a corpus and contiguous ids,
// assigned in first-occurrence order.
class Vocab {
 public:
  Vocab() { index_.fill(-1); }

  static Vocab from_octets(const Bytes& octets_in_id_order);

  std::size_t size() const { return octets_.size(); }
  bool contains(std::uint8_t octet) const { return index_[octet] >= 0; }
  std::optional<TokenId> find(std::uint8_t octet) const;
  // Throws UnknownToken.
  TokenId id(std::uint8_t octet) const;
  std::uint8_t octet(TokenId id) const { return octets_.at(id); }
  const Bytes& octets() const { return octets_; }

  // Returns the id of `octet`, adding it if absent.
  TokenId add(std::uint8_t octet);

  bool operator==(const Vocab& other) const { return octets_ == other.octets_; }

 private:
  Bytes octets_;
  std::array<int, 256> index_;
};

struct TokenCorpus {
  std::string name;
  Bytes bytes;
  Vocab vocab;
  std::vector<TokenId> tokens;

  std::size_t size() const { return tokens.size(); }
};

// Throws EmptyCorpus when `raw` is empty.
TokenCorpus encode_corpus(const Bytes& raw, std::string name = {});

// Throws UnknownToken for octets outside the vocabulary.
std::vector<TokenId> encode(const Vocab& vocab, ByteView octets);
Bytes decode(const Vocab& vocab, const std::vector<TokenId>& tokens);

}  // namespace rnnids::seqmodel
