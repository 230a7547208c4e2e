#include "rnnids/dataset/flow.hpp"

#include <map>
#include <stdexcept>

#include "rnnids/signatures/dfa.hpp"
#include "rnnids/signatures/regex_parser.hpp"

namespace rnnids::dataset {

std::string_view to_string(Label l) { return l == Label::kBenign ? "benign" : "malicious"; }

Label parse_label(std::string_view text) {
  if (text == "benign") return Label::kBenign;
  if (text == "malicious") return Label::kMalicious;
  throw std::invalid_argument("unknown label '" + std::string(text) + "'");
}

signatures::FlowHeader FlowRecord::header() const {
  return {static_cast<std::uint8_t>(proto), src_host, dst_host, src_port, dst_port};
}

std::set<Ipv4> hosts_of(const std::vector<FlowRecord>& flows) {
  std::set<Ipv4> hosts;
  for (const FlowRecord& f : flows) {
    hosts.insert(f.src_host);
    hosts.insert(f.dst_host);
  }
  return hosts;
}

std::vector<std::string> check_invariants(const LabeledDataset& ds) {
  std::vector<std::string> problems;
  for (const Ipv4& a : ds.malicious_host_pool) {
    if (ds.benign_hosts.count(a)) problems.push_back("host " + a.to_string() + " is both benign and in the malicious pool");
  }
  std::size_t benign = 0;
  std::size_t malicious = 0;
  for (std::size_t i = 0; i < ds.flows.size(); ++i) {
    const FlowRecord& f = ds.flows[i];
    const std::string where = "flow " + std::to_string(i);
    if (f.label == Label::kBenign) {
      ++benign;
      if (f.origin != kBenignOrigin) problems.push_back(where + ": benign flow with origin '" + f.origin + "'");
    } else {
      ++malicious;
      if (f.origin.empty() || f.origin == kBenignOrigin) problems.push_back(where + ": malicious flow without rule origin");
      if (!ds.malicious_host_pool.count(f.src_host)) {
        problems.push_back(where + ": malicious source " + f.src_host.to_string() + " outside the pool");
      }
    }
  }
  if (benign != ds.manifest.benign_count || malicious != ds.manifest.malicious_count) {
    problems.push_back("manifest counts " + std::to_string(ds.manifest.benign_count) + "/" +
                       std::to_string(ds.manifest.malicious_count) + " differ from flows " +
                       std::to_string(benign) + "/" + std::to_string(malicious));
  }
  return problems;
}

std::vector<std::size_t> revalidate_payloads(const LabeledDataset& ds) {
  std::map<std::string, signatures::Dfa> dfas;
  for (const GenerationRule& r : ds.manifest.generation_rules) {
    dfas.emplace(r.id, signatures::compile(signatures::parse_regex(r.pattern)));
  }
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < ds.flows.size(); ++i) {
    const FlowRecord& f = ds.flows[i];
    if (f.label != Label::kMalicious) continue;
    auto it = dfas.find(f.origin);
    if (it == dfas.end() || !it->second.matches(f.payload)) bad.push_back(i);
  }
  return bad;
}

}  // namespace rnnids::dataset
