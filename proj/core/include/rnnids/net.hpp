#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rnnids {

struct Ipv4 {
  std::uint32_t value = 0;  // host byte order

  auto operator<=>(const Ipv4&) const = default;

  std::string to_string() const;
  // Dotted quad. Throws std::invalid_argument.
  static Ipv4 parse(std::string_view text);
};

struct Ipv4Net {
  Ipv4 base;
  int prefix = 32;

  bool contains(Ipv4 addr) const;
  std::uint64_t size() const { return std::uint64_t{1} << (32 - prefix); }
  Ipv4 at(std::uint64_t offset) const { return Ipv4{base.value + static_cast<std::uint32_t>(offset)}; }
  std::string to_string() const;
  // "a.b.c.d" or "a.b.c.d/n"; host bits are cleared. Throws std::invalid_argument.
  static Ipv4Net parse(std::string_view text);

  bool operator==(const Ipv4Net&) const = default;
};

enum class Proto : std::uint8_t { kTcp = 6, kUdp = 17 };

std::string_view to_string(Proto p);
// "tcp" / "udp". Throws std::invalid_argument.
Proto parse_proto(std::string_view text);

}  // namespace rnnids
