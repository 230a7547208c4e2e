#include "rnnids/detector/experiments.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <set>

#include "rnnids/dataset/overlay.hpp"
#include "rnnids/dataset/synth.hpp"
#include "rnnids/error.hpp"
#include "rnnids/rng.hpp"

namespace rnnids::detector {

namespace {

std::string pct(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

std::optional<double> delta(const std::optional<double>& a, const std::optional<double>& b) {
  if (!a || !b) return std::nullopt;
  return *b - *a;
}

}  // namespace

PairedReport compare_reports(const EvalReport& baseline, const EvalReport& augmented) {
  PairedReport p{baseline, augmented, delta(baseline.fp_pct, augmented.fp_pct),
                 delta(baseline.fn_pct, augmented.fn_pct),
                 static_cast<long long>(augmented.alarms) - static_cast<long long>(baseline.alarms)};
  return p;
}

std::string PairedReport::to_json() const {
  nlohmann::json j;
  j["baseline"] = nlohmann::json::parse(baseline.to_json());
  j["augmented"] = nlohmann::json::parse(augmented.to_json());
  if (fp_delta) j["fp_delta"] = *fp_delta;
  if (fn_delta) j["fn_delta"] = *fn_delta;
  j["alarm_delta"] = alarm_delta;
  j["alarm_counting"] = "one alarm per (flow, rule)";
  return j.dump(2);
}

std::string PairedReport::to_table() const {
  std::string out = "# alarms counted once per (flow, rule)\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-26s %8s %8s %8s\n", "ruleset", "FP%", "FN%", "alarms");
  out += line;
  std::snprintf(line, sizeof line, "%-26s %8s %8s %8zu\n", "off-the-shelf", pct(baseline.fp_pct).c_str(),
                pct(baseline.fn_pct).c_str(), baseline.alarms);
  out += line;
  std::snprintf(line, sizeof line, "%-26s %8s %8s %8zu\n", "enhanced (with synthetic)", pct(augmented.fp_pct).c_str(),
                pct(augmented.fn_pct).c_str(), augmented.alarms);
  out += line;
  return out;
}

WormResult experiment_worm(const Ruleset& baseline, const signatures::SignatureRule& synthetic_rule,
                           const WormScenario& scenario) {
  const std::set<Ipv4> pool = scenario.pool.empty() ? dataset::expand_pool(dataset::kDefaultMaliciousPool) : scenario.pool;
  const std::vector<Ipv4> sources(pool.begin(), pool.end());
  std::set<Ipv4> victims_set = dataset::hosts_of(scenario.benign);
  const std::vector<Ipv4> victims(victims_set.begin(), victims_set.end());

  Rng rng(mix_seed(scenario.seed, 1));
  std::vector<dataset::FlowRecord> malicious;
  for (std::size_t k = 0; k < scenario.mutants.size(); ++k) {
    dataset::FlowRecord f;
    f.proto = Proto::kTcp;
    f.src_host = sources[rng.below(sources.size())];
    f.dst_host = victims.empty() ? Ipv4::parse("198.51.100.1") : victims[rng.below(victims.size())];
    f.src_port = static_cast<std::uint16_t>(rng.between(1024, 65535));
    f.dst_port = scenario.dst_port;
    f.payload = scenario.mutants[k];
    f.label = dataset::Label::kMalicious;
    f.origin = "worm_mutant_" + std::to_string(k);
    malicious.push_back(std::move(f));
  }

  WormResult out;
  out.dataset = dataset::overlay(scenario.benign, std::move(malicious), pool, mix_seed(scenario.seed, 2));
  out.dataset.manifest.seeds["worm"] = scenario.seed;

  Ruleset augmented = baseline;
  augmented.add(synthetic_rule, Provenance::kSynthetic);
  out.report = compare_reports(evaluate(out.dataset, scan(out.dataset, baseline)),
                               evaluate(out.dataset, scan(out.dataset, augmented)));
  return out;
}

PairedReport experiment_general(const Ruleset& ruleset, const std::vector<signatures::SignatureRule>& synthetic_rules,
                                const dataset::LabeledDataset& ds) {
  std::set<std::string> gen_ids;
  std::set<std::string> gen_patterns;
  for (const dataset::GenerationRule& g : ds.manifest.generation_rules) {
    gen_ids.insert(g.id);
    gen_patterns.insert(g.pattern);
  }
  for (const dataset::FlowRecord& f : ds.flows) {
    if (f.label == dataset::Label::kMalicious) gen_ids.insert(f.origin);
  }
  for (const signatures::SignatureRule& r : synthetic_rules) {
    if (gen_ids.count(r.id)) {
      throw LeakageError("added rule '" + r.id + "' generated the dataset's malicious flows");
    }
    if (r.payload_regex) {
      const std::string pattern = r.payload_source.empty() ? signatures::to_pattern(*r.payload_regex) : r.payload_source;
      if (gen_patterns.count(pattern) || gen_patterns.count(signatures::to_pattern(*r.payload_regex))) {
        throw LeakageError("added rule '" + r.id + "' repeats a generation pattern");
      }
    }
  }
  Ruleset augmented = ruleset;
  for (const signatures::SignatureRule& r : synthetic_rules) augmented.add(r, Provenance::kSynthetic);
  return compare_reports(evaluate(ds, scan(ds, ruleset)), evaluate(ds, scan(ds, augmented)));
}

}  // namespace rnnids::detector
