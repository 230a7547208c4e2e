#include "rnnids/detector/evaluate.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace rnnids::detector {

std::vector<Alarm> scan(const std::vector<dataset::FlowRecord>& flows, const Ruleset& ruleset) {
  // rule order by id, so each flow's alarms come out sorted
  std::vector<const CompiledRule*> order;
  for (const CompiledRule& c : ruleset.rules()) order.push_back(&c);
  std::sort(order.begin(), order.end(), [](const CompiledRule* a, const CompiledRule* b) { return a->rule.id < b->rule.id; });

  std::vector<Alarm> alarms;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    const signatures::FlowHeader h = flows[i].header();
    for (const CompiledRule* c : order) {
      if (c->matches(h, flows[i].payload)) alarms.push_back({i, c->rule.id, true});
    }
  }
  return alarms;
}

EvalReport evaluate(const dataset::LabeledDataset& ds, const std::vector<Alarm>& alarms) {
  EvalReport r;
  std::vector<std::uint8_t> alarmed(ds.flows.size(), 0);
  for (const Alarm& a : alarms) {
    if (!a.matched) continue;
    ++r.alarms;
    ++r.per_rule_hits[a.rule_id];
    if (a.flow_index < alarmed.size()) alarmed[a.flow_index] = 1;
  }
  for (std::size_t i = 0; i < ds.flows.size(); ++i) {
    if (ds.flows[i].label == dataset::Label::kBenign) {
      ++r.benign_total;
      r.benign_alarmed += alarmed[i];
    } else {
      ++r.malicious_total;
      r.malicious_missed += alarmed[i] ? 0 : 1;
    }
  }
  if (r.benign_total) r.fp_pct = 100.0 * static_cast<double>(r.benign_alarmed) / static_cast<double>(r.benign_total);
  if (r.malicious_total) {
    r.fn_pct = 100.0 * static_cast<double>(r.malicious_missed) / static_cast<double>(r.malicious_total);
  }
  return r;
}

std::string EvalReport::to_json() const {
  nlohmann::json j;
  if (fp_pct) j["fp_pct"] = *fp_pct;
  if (fn_pct) j["fn_pct"] = *fn_pct;
  j["alarms"] = alarms;
  j["per_rule_hits"] = per_rule_hits;
  j["benign_total"] = benign_total;
  j["malicious_total"] = malicious_total;
  j["benign_alarmed"] = benign_alarmed;
  j["malicious_missed"] = malicious_missed;
  return j.dump(2);
}

}  // namespace rnnids::detector
