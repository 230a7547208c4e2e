#include "rnnids/dataset/overlay.hpp"

#include <algorithm>

#include "rnnids/error.hpp"
#include "rnnids/rng.hpp"

namespace rnnids::dataset {

LabeledDataset overlay(std::vector<FlowRecord> benign, std::vector<FlowRecord> malicious, const std::set<Ipv4>& pool,
                       std::uint64_t rng_seed) {
  LabeledDataset ds;
  ds.benign_hosts = hosts_of(benign);
  ds.malicious_host_pool = pool;
  if (pool.empty()) {
    for (const FlowRecord& f : malicious) ds.malicious_host_pool.insert(f.src_host);
  }
  std::vector<std::string> overlap;
  for (const Ipv4& a : ds.malicious_host_pool) {
    if (ds.benign_hosts.count(a)) overlap.push_back(a.to_string());
  }
  if (!overlap.empty()) {
    std::string list;
    for (const std::string& a : overlap) list += (list.empty() ? "" : ", ") + a;
    throw HostOverlapError(overlap, "malicious hosts present in benign traffic: " + list);
  }
  for (const FlowRecord& f : malicious) {
    if (!ds.malicious_host_pool.count(f.src_host)) {
      throw InvalidConfig("malicious source " + f.src_host.to_string() + " is outside the host pool");
    }
  }

  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (!benign.empty()) {
    const auto [mn, mx] = std::minmax_element(benign.begin(), benign.end(), [](const auto& a, const auto& b) {
      return a.timestamp_us < b.timestamp_us;
    });
    lo = mn->timestamp_us;
    hi = mx->timestamp_us;
  }
  Rng rng(rng_seed);
  for (FlowRecord& f : malicious) {
    f.label = Label::kMalicious;
    f.timestamp_us = rng.between(lo, hi);
  }
  for (FlowRecord& f : benign) {
    f.label = Label::kBenign;
    f.origin = std::string(kBenignOrigin);
  }

  ds.manifest.benign_count = benign.size();
  ds.manifest.malicious_count = malicious.size();
  ds.manifest.seeds["overlay"] = rng_seed;
  ds.flows = std::move(benign);
  ds.flows.insert(ds.flows.end(), std::make_move_iterator(malicious.begin()), std::make_move_iterator(malicious.end()));
  std::stable_sort(ds.flows.begin(), ds.flows.end(),
                   [](const FlowRecord& a, const FlowRecord& b) { return a.timestamp_us < b.timestamp_us; });
  return ds;
}

BuildResult build_dataset(std::vector<FlowRecord> benign, const std::vector<signatures::SignatureRule>& rules,
                          std::size_t per_rule, const std::set<Ipv4>& pool, std::uint64_t rng_seed,
                          const SynthOptions& opts) {
  const std::uint64_t synth_seed = mix_seed(rng_seed, 1);
  const std::uint64_t overlay_seed = mix_seed(rng_seed, 2);
  SynthResult s = synth_malicious_flows(rules, per_rule, pool, hosts_of(benign), synth_seed, opts);
  BuildResult out;
  out.dataset = overlay(std::move(benign), std::move(s.flows), pool, overlay_seed);
  out.dataset.manifest.seeds["dataset"] = rng_seed;
  out.dataset.manifest.seeds["synth"] = synth_seed;
  out.dataset.manifest.generation_rules = std::move(s.used);
  out.skipped = std::move(s.skipped);
  return out;
}

}  // namespace rnnids::dataset
