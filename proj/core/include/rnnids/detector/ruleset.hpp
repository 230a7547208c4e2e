#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rnnids/signatures/dfa.hpp"
#include "rnnids/signatures/rule.hpp"

namespace rnnids::detector {

enum class Provenance : std::uint8_t { kOriginal, kSynthetic };

std::string_view to_string(Provenance p);

struct CompiledRule {
  signatures::SignatureRule rule;
  // Absent for rules without a payload pattern; those match on headers alone.
  std::optional<signatures::Dfa> dfa;
  Provenance provenance = Provenance::kOriginal;

  bool matches(const signatures::FlowHeader& header, ByteView payload) const;
};

// Rules compiled on insertion, ids unique.
class Ruleset {
 public:
  Ruleset() = default;
  Ruleset(const std::vector<signatures::SignatureRule>& rules, Provenance provenance);

  // Throws DuplicateRule, DfaTooLarge.
  void add(signatures::SignatureRule rule, Provenance provenance);
  // Copies every rule of `other`; throws DuplicateRule on an id clash.
  void extend(const Ruleset& other);

  bool contains(std::string_view id) const;
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const std::vector<CompiledRule>& rules() const { return rules_; }
  std::vector<signatures::SignatureRule> plain_rules() const;

 private:
  std::vector<CompiledRule> rules_;
};

}  // namespace rnnids::detector
