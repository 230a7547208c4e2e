#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rnnids/dataset/flow.hpp"
#include "rnnids/net.hpp"
#include "rnnids/signatures/generate.hpp"
#include "rnnids/signatures/rule.hpp"

namespace rnnids::dataset {

// Documentation range; no real capture uses it.
inline const Ipv4Net kDefaultMaliciousPool = Ipv4Net::parse("192.0.2.0/24");

std::set<Ipv4> expand_pool(const Ipv4Net& net);

struct SkippedRule {
  std::string id;
  std::string reason;
};

struct SynthResult {
  std::vector<FlowRecord> flows;
  std::vector<SkippedRule> skipped;
  std::vector<GenerationRule> used;
};

struct SynthOptions {
  std::size_t max_payload_len = signatures::kDefaultMaxGeneratedLength;
};

// `per_rule` malicious flows for every content rule. Payloads come from
// inverse generation, sources uniformly from `pool` (reuse allowed), and
// header fields are chosen to satisfy the rule's header conditions.
// Destinations are benign hosts when there are any. Rules that cannot be
// satisfied are reported in `skipped`. Timestamps are left at 0.
// Throws HostOverlapError if pool and benign hosts intersect, InvalidConfig
// for an empty pool.
SynthResult synth_malicious_flows(const std::vector<signatures::SignatureRule>& rules, std::size_t per_rule,
                                  const std::set<Ipv4>& pool, const std::set<Ipv4>& benign_hosts,
                                  std::uint64_t rng_seed, const SynthOptions& opts = {});

}  // namespace rnnids::dataset
