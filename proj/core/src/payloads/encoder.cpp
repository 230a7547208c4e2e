#include "rnnids/payloads/encoder.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>

#include "rnnids/error.hpp"
#include "rnnids/rng.hpp"

namespace rnnids::payloads {

Bytes xor_sliding(ByteView body, ByteView key) {
  if (key.empty()) throw EmptyKey("encoding key is empty");
  Bytes out(body.begin(), body.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= key[i % key.size()];
  return out;
}

Bytes toy_encode(ByteView payload, ByteView key, std::size_t iterations, std::uint64_t rng_seed) {
  if (key.empty()) throw EmptyKey("encoding key is empty");
  Bytes buf(payload.begin(), payload.end());
  Bytes k(key.begin(), key.end());
  Rng rng(rng_seed);
  for (std::size_t round = 0; round < iterations; ++round) {
    Bytes body = xor_sliding(buf, k);
    buf.assign(kStubMarker.begin(), kStubMarker.end());
    for (std::size_t j = 0; j < kJunkOctets; ++j) buf.push_back(static_cast<std::uint8_t>(rng.below(256)));
    buf.insert(buf.end(), body.begin(), body.end());
    std::rotate(k.begin(), k.begin() + 1, k.end());
  }
  return buf;
}

PayloadCorpus build_corpus(ByteView base, ByteView key, std::size_t max_iterations, std::uint64_t seed) {
  PayloadCorpus c;
  c.base_payload.assign(base.begin(), base.end());
  c.key.assign(key.begin(), key.end());
  c.seed = seed;
  c.variants.reserve(max_iterations + 1);
  for (std::size_t k = 0; k <= max_iterations; ++k) c.variants.push_back(toy_encode(base, key, k, seed));
  return c;
}

void write_corpus(const std::filesystem::path& dir, const PayloadCorpus& corpus) {
  std::filesystem::create_directories(dir);
  nlohmann::json m;
  m["engine"] = corpus.engine;
  m["key"] = to_hex(corpus.key);
  m["seed"] = corpus.seed;
  m["base_payload"] = to_hex(corpus.base_payload);
  m["variants"] = corpus.variants.size();
  for (std::size_t k = 0; k < corpus.variants.size(); ++k) {
    write_file(dir / ("variant_" + std::to_string(k) + ".bin"), corpus.variants[k]);
  }
  write_file(dir / "manifest.json", m.dump(2) + "\n");
}

PayloadCorpus read_corpus(const std::filesystem::path& dir) {
  const Bytes raw = read_file(dir / "manifest.json");
  const auto m = nlohmann::json::parse(raw.begin(), raw.end());
  PayloadCorpus c;
  c.engine = m.at("engine").get<std::string>();
  c.key = from_hex(m.at("key").get<std::string>());
  c.seed = m.at("seed").get<std::uint64_t>();
  c.base_payload = from_hex(m.at("base_payload").get<std::string>());
  const auto n = m.at("variants").get<std::size_t>();
  for (std::size_t k = 0; k < n; ++k) c.variants.push_back(read_file(dir / ("variant_" + std::to_string(k) + ".bin")));
  return c;
}

}  // namespace rnnids::payloads
