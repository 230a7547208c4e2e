#include <gtest/gtest.h>

#include <filesystem>

#include "rnnids/error.hpp"
#include "rnnids/payloads/encoder.hpp"

namespace rnnids::payloads {
namespace {

const Bytes kPayload = to_bytes("\x31\xc0\x50\x68//sh\x68/bin\x89\xe3\x50\x53\x89\xe1\xb0\x0b\xcd\x80");
const Bytes kKey = {0x5A, 0xC3};

TEST(ToyEncoder, ZeroIterationsIsIdentity) { EXPECT_EQ(toy_encode(kPayload, kKey, 0, 1), kPayload); }

TEST(ToyEncoder, SlidingXorIsAnInvolution) {
  EXPECT_EQ(xor_sliding(xor_sliding(kPayload, kKey), kKey), kPayload);
  EXPECT_NE(xor_sliding(kPayload, kKey), kPayload);
}

TEST(ToyEncoder, DeterministicInAllInputs) {
  EXPECT_EQ(toy_encode(kPayload, kKey, 3, 42), toy_encode(kPayload, kKey, 3, 42));
  EXPECT_NE(toy_encode(kPayload, kKey, 3, 42), toy_encode(kPayload, kKey, 3, 43));
}

TEST(ToyEncoder, RoundLayout) {
  const Bytes one = toy_encode(kPayload, kKey, 1, 7);
  ASSERT_EQ(one.size(), kPayload.size() + kRoundOverhead);
  EXPECT_TRUE(std::equal(kStubMarker.begin(), kStubMarker.end(), one.begin()));
  const Bytes body(one.begin() + kRoundOverhead, one.end());
  EXPECT_EQ(xor_sliding(body, kKey), kPayload);

  const Bytes three = toy_encode(kPayload, kKey, 3, 7);
  EXPECT_EQ(three.size(), kPayload.size() + 3 * kRoundOverhead);
  EXPECT_TRUE(std::equal(kStubMarker.begin(), kStubMarker.end(), three.begin()));
}

TEST(ToyEncoder, LayersPeelOff) {
  // round r uses the key rotated r times; undo them outermost first
  const Bytes enc = toy_encode(kPayload, Bytes{1, 2, 3}, 3, 9);
  Bytes buf = enc;
  const std::vector<Bytes> keys = {{3, 1, 2}, {2, 3, 1}, {1, 2, 3}};
  for (const Bytes& k : keys) {
    buf = xor_sliding(Bytes(buf.begin() + kRoundOverhead, buf.end()), k);
  }
  EXPECT_EQ(buf, kPayload);
}

TEST(ToyEncoder, EmptyKey) {
  EXPECT_THROW(toy_encode(kPayload, {}, 1, 1), EmptyKey);
  EXPECT_THROW(xor_sliding(kPayload, {}), EmptyKey);
}

TEST(Corpus, VariantsAndDiskRoundTrip) {
  const PayloadCorpus c = build_corpus(kPayload, kKey, 5, 3);
  ASSERT_EQ(c.variants.size(), 6u);
  EXPECT_EQ(c.variants[0], kPayload);
  EXPECT_EQ(c.variants[4], toy_encode(kPayload, kKey, 4, 3));
  const auto dir = std::filesystem::temp_directory_path() / "rnnids_corpus_test";
  std::filesystem::remove_all(dir);
  write_corpus(dir, c);
  EXPECT_TRUE(std::filesystem::exists(dir / "variant_5.bin"));
  EXPECT_EQ(read_corpus(dir), c);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rnnids::payloads
