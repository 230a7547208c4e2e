#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rnnids/dataset/flow.hpp"
#include "rnnids/detector/evaluate.hpp"
#include "rnnids/detector/ruleset.hpp"

namespace rnnids::detector {

struct PairedReport {
  EvalReport baseline;
  EvalReport augmented;
  std::optional<double> fp_delta;  // augmented - baseline
  std::optional<double> fn_delta;
  long long alarm_delta = 0;

  std::string to_json() const;
  // Two rows (off-the-shelf, enhanced) by FP% / FN% / alarms; absent
  // rates print as "n/a".
  std::string to_table() const;
};

PairedReport compare_reports(const EvalReport& baseline, const EvalReport& augmented);

struct WormScenario {
  std::vector<Bytes> mutants;
  std::vector<dataset::FlowRecord> benign;
  std::set<Ipv4> pool;  // empty: the default documentation range
  std::uint16_t dst_port = 80;
  std::uint64_t seed = 0;
};

// Builds one overlay dataset with a malicious TCP flow per mutant, then
// scans it with the baseline and with baseline plus the synthetic rule.
// The rule id must not already be in the baseline.
struct WormResult {
  dataset::LabeledDataset dataset;
  PairedReport report;
};
WormResult experiment_worm(const Ruleset& baseline, const signatures::SignatureRule& synthetic_rule,
                           const WormScenario& scenario);

// Scans `ds` with `ruleset` and with `ruleset` plus `synthetic_rules`.
// Throws LeakageError when an added rule shares an id or pattern with the
// rules the dataset was generated from, or names a flow origin.
PairedReport experiment_general(const Ruleset& ruleset, const std::vector<signatures::SignatureRule>& synthetic_rules,
                                const dataset::LabeledDataset& ds);

}  // namespace rnnids::detector
