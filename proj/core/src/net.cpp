#include "rnnids/net.hpp"

#include <charconv>
#include <stdexcept>

namespace rnnids {

std::string Ipv4::to_string() const {
  return std::to_string(value >> 24) + '.' + std::to_string((value >> 16) & 255) + '.' +
         std::to_string((value >> 8) & 255) + '.' + std::to_string(value & 255);
}

Ipv4 Ipv4::parse(std::string_view text) {
  std::uint32_t result = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int octet = 0; octet < 4; ++octet) {
    if (octet > 0) {
      if (p == end || *p != '.') throw std::invalid_argument("bad IPv4 address: " + std::string(text));
      ++p;
    }
    unsigned v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || next == p || next - p > 3 || v > 255) {
      throw std::invalid_argument("bad IPv4 address: " + std::string(text));
    }
    result = result << 8 | v;
    p = next;
  }
  if (p != end) throw std::invalid_argument("bad IPv4 address: " + std::string(text));
  return Ipv4{result};
}

bool Ipv4Net::contains(Ipv4 addr) const {
  if (prefix == 0) return true;
  const std::uint32_t mask = ~std::uint32_t{0} << (32 - prefix);
  return (addr.value & mask) == (base.value & mask);
}

std::string Ipv4Net::to_string() const {
  return base.to_string() + '/' + std::to_string(prefix);
}

Ipv4Net Ipv4Net::parse(std::string_view text) {
  Ipv4Net net;
  const auto slash = text.find('/');
  net.base = Ipv4::parse(text.substr(0, slash));
  if (slash != std::string_view::npos) {
    const auto digits = text.substr(slash + 1);
    int prefix = -1;
    auto [next, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), prefix);
    if (ec != std::errc() || next != digits.data() + digits.size() || prefix < 0 || prefix > 32) {
      throw std::invalid_argument("bad prefix length: " + std::string(text));
    }
    net.prefix = prefix;
  }
  if (net.prefix < 32) {
    const std::uint32_t mask = net.prefix == 0 ? 0 : ~std::uint32_t{0} << (32 - net.prefix);
    net.base.value &= mask;
  }
  return net;
}

std::string_view to_string(Proto p) { return p == Proto::kTcp ? "tcp" : "udp"; }

Proto parse_proto(std::string_view text) {
  if (text == "tcp") return Proto::kTcp;
  if (text == "udp") return Proto::kUdp;
  throw std::invalid_argument("unknown protocol: " + std::string(text));
}

}  // namespace rnnids
