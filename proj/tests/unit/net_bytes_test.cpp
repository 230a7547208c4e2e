#include <gtest/gtest.h>

#include <stdexcept>

#include "rnnids/bytes.hpp"
#include "rnnids/net.hpp"
#include "rnnids/rng.hpp"

namespace rnnids {
namespace {

TEST(Ipv4, ParseAndPrint) {
  EXPECT_EQ(Ipv4::parse("192.0.2.1").value, 0xC0000201u);
  EXPECT_EQ(Ipv4{0x0A000001}.to_string(), "10.0.0.1");
  EXPECT_THROW(Ipv4::parse("256.0.0.1"), std::invalid_argument);
  EXPECT_THROW(Ipv4::parse("1.2.3"), std::invalid_argument);
}

TEST(Ipv4Net, Membership) {
  const Ipv4Net n = Ipv4Net::parse("192.0.2.77/24");
  EXPECT_EQ(n.to_string(), "192.0.2.0/24");
  EXPECT_EQ(n.size(), 256u);
  EXPECT_TRUE(n.contains(Ipv4::parse("192.0.2.255")));
  EXPECT_FALSE(n.contains(Ipv4::parse("192.0.3.0")));
  EXPECT_TRUE(Ipv4Net::parse("0.0.0.0/0").contains(Ipv4::parse("8.8.8.8")));
  EXPECT_THROW(Ipv4Net::parse("10.0.0.0/33"), std::invalid_argument);
}

TEST(Base64, RoundTripAllLengths) {
  Rng rng(6);
  for (std::size_t len = 0; len < 40; ++len) {
    Bytes b(len);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng.below(256));
    EXPECT_EQ(base64_decode(base64_encode(b)), b);
  }
  EXPECT_EQ(base64_encode(to_bytes("foobar")), "Zm9vYmFy");
  EXPECT_EQ(base64_encode(to_bytes("fo")), "Zm8=");
  EXPECT_THROW(base64_decode("Zm9v!"), std::invalid_argument);
}

TEST(Hex, RoundTrip) {
  EXPECT_EQ(to_hex(Bytes{0x00, 0xab, 0xff}), "00abff");
  EXPECT_EQ(from_hex("00ABff"), (Bytes{0x00, 0xab, 0xff}));
  EXPECT_THROW(from_hex("abc"), std::invalid_argument);
}

TEST(Rng, DerivedDrawsAreInRange) {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const auto v = rng.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
}

}  // namespace
}  // namespace rnnids
