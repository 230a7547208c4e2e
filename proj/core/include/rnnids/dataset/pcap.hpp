#pragma once

#include <cstdint>
#include <vector>

#include "rnnids/bytes.hpp"
#include "rnnids/dataset/flow.hpp"

namespace rnnids::dataset {

struct PcapIngest {
  std::vector<FlowRecord> flows;
  std::size_t packets = 0;   // records read
  std::size_t skipped = 0;   // non-IPv4, fragments, other transports, short headers
  std::size_t warnings = 0;  // a truncated trailing record
};

// Classic libpcap with microsecond timestamps, either byte order; Ethernet
// (with at most one 802.1Q tag) or raw IPv4 link types. One benign flow per
// TCP/UDP packet. Throws PcapFormatError for a bad global header.
PcapIngest ingest_pcap(ByteView file);

}  // namespace rnnids::dataset
