#pragma once

// Writes libpcap captures octet by octet from the published header layouts,
// for feeding hand-made packets to the ingester.

#include <cstdint>
#include <string>
#include <vector>

namespace rnnids::oracle {

class PcapBuilder {
 public:
  explicit PcapBuilder(bool big_endian = false, std::uint32_t link_type = 1) : big_(big_endian) {
    u32(0xA1B2C3D4);
    u16(2);
    u16(4);
    u32(0);        // thiszone
    u32(0);        // sigfigs
    u32(65535);    // snaplen
    u32(link_type);
  }

  // One record holding `frame`.
  PcapBuilder& record(const std::vector<std::uint8_t>& frame, std::uint32_t sec = 1, std::uint32_t usec = 0) {
    u32(sec);
    u32(usec);
    u32(static_cast<std::uint32_t>(frame.size()));
    u32(static_cast<std::uint32_t>(frame.size()));
    out_.insert(out_.end(), frame.begin(), frame.end());
    return *this;
  }

  const std::vector<std::uint8_t>& bytes() const { return out_; }

 private:
  void u16(std::uint16_t v) {
    if (big_) {
      out_.push_back(static_cast<std::uint8_t>(v >> 8));
      out_.push_back(static_cast<std::uint8_t>(v));
    } else {
      out_.push_back(static_cast<std::uint8_t>(v));
      out_.push_back(static_cast<std::uint8_t>(v >> 8));
    }
  }
  void u32(std::uint32_t v) {
    if (big_) {
      u16(static_cast<std::uint16_t>(v >> 16));
      u16(static_cast<std::uint16_t>(v));
    } else {
      u16(static_cast<std::uint16_t>(v));
      u16(static_cast<std::uint16_t>(v >> 16));
    }
  }

  bool big_;
  std::vector<std::uint8_t> out_;
};

inline void put16(std::vector<std::uint8_t>& b, std::uint16_t v) {
  b.push_back(static_cast<std::uint8_t>(v >> 8));
  b.push_back(static_cast<std::uint8_t>(v));
}

inline void put32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  put16(b, static_cast<std::uint16_t>(v >> 16));
  put16(b, static_cast<std::uint16_t>(v));
}

struct PacketSpec {
  std::uint8_t proto = 17;
  std::uint32_t src = 0x0A000001;  // 10.0.0.1
  std::uint32_t dst = 0x0A000002;
  std::uint16_t sport = 1234;
  std::uint16_t dport = 53;
  std::string payload;
  std::uint16_t frag = 0;  // flags + offset field
  bool vlan = false;
  std::uint16_t ethertype = 0x0800;
};

// IPv4 datagram (checksums left zero; the ingester does not verify them).
inline std::vector<std::uint8_t> ipv4_packet(const PacketSpec& p) {
  std::vector<std::uint8_t> l4;
  if (p.proto == 6) {
    put16(l4, p.sport);
    put16(l4, p.dport);
    put32(l4, 1);  // seq
    put32(l4, 0);  // ack
    l4.push_back(5 << 4);
    l4.push_back(0x18);  // PSH ACK
    put16(l4, 65535);
    put16(l4, 0);
    put16(l4, 0);
  } else {
    put16(l4, p.sport);
    put16(l4, p.dport);
    put16(l4, static_cast<std::uint16_t>(8 + p.payload.size()));
    put16(l4, 0);
  }
  l4.insert(l4.end(), p.payload.begin(), p.payload.end());
  std::vector<std::uint8_t> ip;
  ip.push_back(0x45);
  ip.push_back(0);
  put16(ip, static_cast<std::uint16_t>(20 + l4.size()));
  put16(ip, 1);
  put16(ip, p.frag);
  ip.push_back(64);
  ip.push_back(p.proto);
  put16(ip, 0);
  put32(ip, p.src);
  put32(ip, p.dst);
  ip.insert(ip.end(), l4.begin(), l4.end());
  return ip;
}

inline std::vector<std::uint8_t> ethernet_frame(const PacketSpec& p) {
  std::vector<std::uint8_t> f = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  if (p.vlan) {
    put16(f, 0x8100);
    put16(f, 42);
  }
  put16(f, p.ethertype);
  if (p.ethertype == 0x0800) {
    auto ip = ipv4_packet(p);
    f.insert(f.end(), ip.begin(), ip.end());
  } else {
    // ARP request body, 28 octets
    for (int i = 0; i < 28; ++i) f.push_back(static_cast<std::uint8_t>(i));
  }
  return f;
}

}  // namespace rnnids::oracle
