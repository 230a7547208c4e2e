#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rnnids/net.hpp"
#include "rnnids/signatures/regex_ast.hpp"

namespace rnnids::signatures {

// The header fields of one packet, as seen by header conditions.
struct FlowHeader {
  std::uint8_t ip_proto = static_cast<std::uint8_t>(Proto::kTcp);
  Ipv4 src_host;
  Ipv4 dst_host;
  std::uint16_t src_port = 0;
  std::uint16_t dst_port = 0;
};

enum class HeaderField : std::uint8_t { kIpProto, kSrcHost, kDstHost, kSrcPort, kDstPort };
enum class CmpOp : std::uint8_t { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view to_string(HeaderField f);
std::string_view to_string(CmpOp op);

// `field op v1,v2,...`. Host fields compare by network membership and allow
// only == and !=; numeric fields compare by value. A list means any-of for
// ==, none-of for !=, and is rejected for the ordering operators.
struct HeaderCondition {
  HeaderField field = HeaderField::kIpProto;
  CmpOp op = CmpOp::kEq;
  std::vector<std::uint32_t> numbers;  // ip-proto and ports
  std::vector<Ipv4Net> nets;           // hosts

  bool operator==(const HeaderCondition&) const = default;

  bool holds(const FlowHeader& h) const;
  // Same for a single numeric value of this condition's field.
  bool holds_value(std::uint32_t v) const;
  std::string to_string() const;
};

struct SignatureRule {
  std::string id;
  std::vector<HeaderCondition> header_conditions;
  std::optional<RegexAst> payload_regex;
  std::string payload_source;  // pattern text between the slashes
  std::vector<std::string> options;  // unrecognised condition lines, verbatim
  std::vector<std::string> actions;  // e.g. `enable "ssh"`

  bool operator==(const SignatureRule&) const = default;

  bool header_matches(const FlowHeader& h) const;
};

// Blocks of the form
//   signature <id> {
//     ip-proto == tcp
//     payload /<pattern>/
//     enable "ssh"
//   }
// with `#` comment lines. Throws ParseError with a 1-based line number.
std::vector<SignatureRule> parse_ruleset(std::string_view text);

// Inverse of parse_ruleset for rules it produced.
std::string format_rule(const SignatureRule& rule);
std::string format_ruleset(const std::vector<SignatureRule>& rules);

// Union(r1, r2); L(result) = L(r1) ∪ L(r2).
RegexAst regex_union(RegexAst r1, RegexAst r2);

// Builds a rule around a pattern, copying header conditions and actions from
// `like`. Throws RegexSyntaxError for a bad pattern.
SignatureRule make_rule(std::string id, std::string_view pattern, const SignatureRule& like = {});

}  // namespace rnnids::signatures
