#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>

#include "rnnids/bytes.hpp"

namespace rnnids::payloads {

// Prologue written in front of every encoding round.
inline constexpr std::array<std::uint8_t, 8> kStubMarker = {0xEB, 0x10, 0x5E, 0x31, 0xC9, 0xB1, 0x00, 0x90};
inline constexpr std::size_t kJunkOctets = 2;
inline constexpr std::size_t kRoundOverhead = kStubMarker.size() + kJunkOctets;

// body[i] ^ key[i mod |key|]. An involution for a fixed key.
Bytes xor_sliding(ByteView body, ByteView key);

// `iterations` rounds of: XOR the whole buffer with the current key, prepend
// the stub marker and two junk octets, rotate the key left by one.
// Zero iterations return the payload unchanged. Throws EmptyKey.
Bytes toy_encode(ByteView payload, ByteView key, std::size_t iterations, std::uint64_t rng_seed);

struct PayloadCorpus {
  std::string engine = "toy-xor";
  Bytes base_payload;
  Bytes key;
  std::uint64_t seed = 0;
  std::vector<Bytes> variants;  // variants[k] has k encoding rounds

  bool operator==(const PayloadCorpus&) const = default;
};

// variants[k] = toy_encode(base, key, k, seed) for k in [0, max_iterations].
PayloadCorpus build_corpus(ByteView base, ByteView key, std::size_t max_iterations, std::uint64_t seed);

// Directory of variant_<k>.bin plus manifest.json (engine, key, seed).
void write_corpus(const std::filesystem::path& dir, const PayloadCorpus& corpus);
PayloadCorpus read_corpus(const std::filesystem::path& dir);

}  // namespace rnnids::payloads
