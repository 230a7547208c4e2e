#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rnnids/bytes.hpp"
#include "rnnids/net.hpp"
#include "rnnids/signatures/rule.hpp"

namespace rnnids::dataset {

enum class Label : std::uint8_t { kBenign, kMalicious };

std::string_view to_string(Label l);
// Throws std::invalid_argument.
Label parse_label(std::string_view text);

inline constexpr std::string_view kBenignOrigin = "benign";

// One packet observation; no stream reassembly.
struct FlowRecord {
  Ipv4 src_host;
  Ipv4 dst_host;
  std::uint16_t src_port = 0;
  std::uint16_t dst_port = 0;
  Proto proto = Proto::kTcp;
  Bytes payload;
  std::int64_t timestamp_us = 0;
  Label label = Label::kBenign;
  std::string origin{kBenignOrigin};  // generating rule id for malicious flows

  bool operator==(const FlowRecord&) const = default;

  signatures::FlowHeader header() const;
};

struct GenerationRule {
  std::string id;
  std::string pattern;

  bool operator==(const GenerationRule&) const = default;
};

struct DatasetManifest {
  static constexpr int kVersion = 1;

  int version = kVersion;
  std::size_t benign_count = 0;
  std::size_t malicious_count = 0;
  std::map<std::string, std::uint64_t> seeds;
  // rules the malicious flows were synthesized from
  std::vector<GenerationRule> generation_rules;

  bool operator==(const DatasetManifest&) const = default;
};

struct LabeledDataset {
  std::vector<FlowRecord> flows;
  std::set<Ipv4> benign_hosts;
  std::set<Ipv4> malicious_host_pool;
  DatasetManifest manifest;

  bool operator==(const LabeledDataset&) const = default;
};

// Every address that appears on either side of a flow.
std::set<Ipv4> hosts_of(const std::vector<FlowRecord>& flows);

// Broken dataset invariants as readable messages; empty when all hold:
// host disjointness, malicious sources inside the pool, label/origin
// consistency, manifest counts.
std::vector<std::string> check_invariants(const LabeledDataset& ds);

// Indices of malicious flows whose payload does not match the generation
// rule named by their origin (unknown origins count as failures).
std::vector<std::size_t> revalidate_payloads(const LabeledDataset& ds);

}  // namespace rnnids::dataset
