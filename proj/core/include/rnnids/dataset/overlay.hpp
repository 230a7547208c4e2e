#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "rnnids/dataset/flow.hpp"
#include "rnnids/dataset/synth.hpp"

namespace rnnids::dataset {

// Gives malicious flows timestamps drawn uniformly from the benign capture's
// span, merges, and stable-sorts by timestamp. An empty pool means the set of
// malicious source hosts. Throws HostOverlapError listing every address in
// both the pool and the benign hosts, InvalidConfig when a malicious source
// lies outside the pool.
LabeledDataset overlay(std::vector<FlowRecord> benign, std::vector<FlowRecord> malicious,
                       const std::set<Ipv4>& pool, std::uint64_t rng_seed);

struct BuildResult {
  LabeledDataset dataset;
  std::vector<SkippedRule> skipped;
};

// synth_malicious_flows followed by overlay, recording the generation rules
// and both seeds in the manifest.
BuildResult build_dataset(std::vector<FlowRecord> benign, const std::vector<signatures::SignatureRule>& rules,
                          std::size_t per_rule, const std::set<Ipv4>& pool, std::uint64_t rng_seed,
                          const SynthOptions& opts = {});

}  // namespace rnnids::dataset
