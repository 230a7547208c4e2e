#include "rnnids/detector/ruleset.hpp"

#include <algorithm>

#include "rnnids/error.hpp"

namespace rnnids::detector {

std::string_view to_string(Provenance p) { return p == Provenance::kOriginal ? "original" : "synthetic"; }

bool CompiledRule::matches(const signatures::FlowHeader& header, ByteView payload) const {
  if (!rule.header_matches(header)) return false;
  return !dfa || dfa->matches(payload);
}

Ruleset::Ruleset(const std::vector<signatures::SignatureRule>& rules, Provenance provenance) {
  for (const auto& r : rules) add(r, provenance);
}

void Ruleset::add(signatures::SignatureRule rule, Provenance provenance) {
  if (contains(rule.id)) throw DuplicateRule("rule id '" + rule.id + "' already in the ruleset");
  CompiledRule c;
  if (rule.payload_regex) c.dfa = signatures::compile(*rule.payload_regex);
  c.rule = std::move(rule);
  c.provenance = provenance;
  rules_.push_back(std::move(c));
}

void Ruleset::extend(const Ruleset& other) {
  for (const CompiledRule& c : other.rules_) {
    if (contains(c.rule.id)) throw DuplicateRule("rule id '" + c.rule.id + "' already in the ruleset");
    rules_.push_back(c);
  }
}

bool Ruleset::contains(std::string_view id) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const CompiledRule& c) { return c.rule.id == id; });
}

std::vector<signatures::SignatureRule> Ruleset::plain_rules() const {
  std::vector<signatures::SignatureRule> out;
  for (const CompiledRule& c : rules_) out.push_back(c.rule);
  return out;
}

}  // namespace rnnids::detector
