#include "rnnids/dataset/pcap.hpp"

#include <cstdio>

#include "rnnids/error.hpp"

namespace rnnids::dataset {

namespace {

constexpr std::uint32_t kMagicMicro = 0xA1B2C3D4;
constexpr std::uint32_t kMagicNano = 0xA1B23C4D;
constexpr std::uint32_t kLinkEthernet = 1;
constexpr std::uint32_t kLinkRaw = 101;
constexpr std::uint32_t kLinkIpv4 = 228;
constexpr std::size_t kGlobalHeader = 24;
constexpr std::size_t kRecordHeader = 16;

std::uint32_t le32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 | std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}
std::uint32_t be32(const std::uint8_t* p) {
  return std::uint32_t{p[3]} | std::uint32_t{p[2]} << 8 | std::uint32_t{p[1]} << 16 | std::uint32_t{p[0]} << 24;
}
std::uint16_t be16(const std::uint8_t* p) { return static_cast<std::uint16_t>(p[0] << 8 | p[1]); }

// Fills everything but the timestamp; false means skip the packet.
bool parse_ipv4(ByteView pkt, FlowRecord& f) {
  if (pkt.size() < 20 || (pkt[0] >> 4) != 4) return false;
  const std::size_t ihl = static_cast<std::size_t>(pkt[0] & 0x0F) * 4;
  const std::size_t total = be16(&pkt[2]);
  if (ihl < 20 || total < ihl || pkt.size() < ihl) return false;
  const std::uint16_t frag = be16(&pkt[6]);
  if ((frag & 0x2000) != 0 || (frag & 0x1FFF) != 0) return false;  // MF or nonzero offset
  const std::uint8_t proto = pkt[9];
  if (proto != static_cast<std::uint8_t>(Proto::kTcp) && proto != static_cast<std::uint8_t>(Proto::kUdp)) return false;
  f.src_host = Ipv4{be32(&pkt[12])};
  f.dst_host = Ipv4{be32(&pkt[16])};
  // trailing link-layer padding is not part of the datagram
  const ByteView l4 = pkt.subspan(ihl, std::min(pkt.size(), total) - ihl);
  if (proto == static_cast<std::uint8_t>(Proto::kTcp)) {
    if (l4.size() < 20) return false;
    const std::size_t off = static_cast<std::size_t>(l4[12] >> 4) * 4;
    if (off < 20 || off > l4.size()) return false;
    f.proto = Proto::kTcp;
    f.src_port = be16(&l4[0]);
    f.dst_port = be16(&l4[2]);
    f.payload.assign(l4.begin() + static_cast<std::ptrdiff_t>(off), l4.end());
  } else {
    if (l4.size() < 8) return false;
    const std::size_t len = be16(&l4[4]);
    if (len < 8) return false;
    f.proto = Proto::kUdp;
    f.src_port = be16(&l4[0]);
    f.dst_port = be16(&l4[2]);
    const std::size_t end = std::min(l4.size(), len);
    f.payload.assign(l4.begin() + 8, l4.begin() + static_cast<std::ptrdiff_t>(end));
  }
  return true;
}

}  // namespace

PcapIngest ingest_pcap(ByteView file) {
  if (file.size() < kGlobalHeader) throw PcapFormatError("truncated pcap global header");
  bool little;
  if (le32(file.data()) == kMagicMicro) {
    little = true;
  } else if (be32(file.data()) == kMagicMicro) {
    little = false;
  } else if (le32(file.data()) == kMagicNano || be32(file.data()) == kMagicNano) {
    throw PcapFormatError("nanosecond-resolution pcap is not supported");
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "bad pcap magic 0x%08x", le32(file.data()));
    throw PcapFormatError(buf);
  }
  auto rd32 = [little](const std::uint8_t* p) { return little ? le32(p) : be32(p); };
  const std::uint32_t link = rd32(&file[20]);
  if (link != kLinkEthernet && link != kLinkRaw && link != kLinkIpv4) {
    throw PcapFormatError("unsupported link type " + std::to_string(link));
  }

  PcapIngest out;
  std::size_t pos = kGlobalHeader;
  while (pos < file.size()) {
    if (file.size() - pos < kRecordHeader) {
      ++out.warnings;
      break;
    }
    const std::uint32_t sec = rd32(&file[pos]);
    const std::uint32_t usec = rd32(&file[pos + 4]);
    const std::size_t incl = rd32(&file[pos + 8]);
    pos += kRecordHeader;
    if (file.size() - pos < incl) {
      ++out.warnings;
      break;
    }
    ByteView pkt = file.subspan(pos, incl);
    pos += incl;
    ++out.packets;

    if (link == kLinkEthernet) {
      if (pkt.size() < 14) {
        ++out.skipped;
        continue;
      }
      std::uint16_t type = be16(&pkt[12]);
      std::size_t l3 = 14;
      if (type == 0x8100 && pkt.size() >= 18) {
        type = be16(&pkt[16]);
        l3 = 18;
      }
      if (type != 0x0800) {
        ++out.skipped;
        continue;
      }
      pkt = pkt.subspan(l3);
    }
    FlowRecord f;
    if (!parse_ipv4(pkt, f)) {
      ++out.skipped;
      continue;
    }
    f.timestamp_us = static_cast<std::int64_t>(sec) * 1000000 + usec;
    out.flows.push_back(std::move(f));
  }
  return out;
}

}  // namespace rnnids::dataset
