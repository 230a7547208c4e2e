#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rnnids/dataset/flow.hpp"
#include "rnnids/detector/ruleset.hpp"

namespace rnnids::detector {

struct Alarm {
  std::size_t flow_index = 0;
  std::string rule_id;
  bool matched = true;

  bool operator==(const Alarm&) const = default;
};

// At most one alarm per (flow, rule), ordered by flow index then rule id.
// Labels are never consulted.
std::vector<Alarm> scan(const std::vector<dataset::FlowRecord>& flows, const Ruleset& ruleset);
inline std::vector<Alarm> scan(const dataset::LabeledDataset& ds, const Ruleset& ruleset) {
  return scan(ds.flows, ruleset);
}

struct EvalReport {
  std::optional<double> fp_pct;  // absent without benign flows
  std::optional<double> fn_pct;  // absent without malicious flows
  std::size_t alarms = 0;
  std::map<std::string, std::size_t> per_rule_hits;
  std::size_t benign_total = 0;
  std::size_t malicious_total = 0;
  std::size_t benign_alarmed = 0;
  std::size_t malicious_missed = 0;

  bool operator==(const EvalReport&) const = default;

  std::string to_json() const;
};

EvalReport evaluate(const dataset::LabeledDataset& ds, const std::vector<Alarm>& alarms);

}  // namespace rnnids::detector
