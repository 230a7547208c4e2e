#include "rnnids/signatures/rule.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rnnids/error.hpp"
#include "rnnids/signatures/regex_parser.hpp"

namespace rnnids::signatures {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

bool is_host_field(HeaderField f) { return f == HeaderField::kSrcHost || f == HeaderField::kDstHost; }

std::optional<HeaderField> field_from_name(std::string_view name) {
  if (name == "ip-proto") return HeaderField::kIpProto;
  if (name == "src-ip" || name == "src-host") return HeaderField::kSrcHost;
  if (name == "dst-ip" || name == "dst-host") return HeaderField::kDstHost;
  if (name == "src-port") return HeaderField::kSrcPort;
  if (name == "dst-port") return HeaderField::kDstPort;
  return std::nullopt;
}

std::optional<CmpOp> op_from_text(std::string_view t) {
  if (t == "==") return CmpOp::kEq;
  if (t == "!=") return CmpOp::kNe;
  if (t == "<") return CmpOp::kLt;
  if (t == "<=") return CmpOp::kLe;
  if (t == ">") return CmpOp::kGt;
  if (t == ">=") return CmpOp::kGe;
  return std::nullopt;
}

std::uint32_t parse_number(std::string_view t, std::uint32_t limit) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || v > limit) {
    throw std::invalid_argument("bad value '" + std::string(t) + "'");
  }
  return v;
}

std::uint32_t parse_proto_value(std::string_view t) {
  if (t == "tcp") return 6;
  if (t == "udp") return 17;
  if (t == "icmp") return 1;
  return parse_number(t, 255);
}

std::string proto_name(std::uint32_t v) {
  if (v == 6) return "tcp";
  if (v == 17) return "udp";
  if (v == 1) return "icmp";
  return std::to_string(v);
}

bool compare(std::uint32_t lhs, CmpOp op, std::uint32_t rhs) {
  switch (op) {
    case CmpOp::kEq: return lhs == rhs;
    case CmpOp::kNe: return lhs != rhs;
    case CmpOp::kLt: return lhs < rhs;
    case CmpOp::kLe: return lhs <= rhs;
    case CmpOp::kGt: return lhs > rhs;
    case CmpOp::kGe: return lhs >= rhs;
  }
  return false;
}

// Returns nullopt when the line is not a header condition at all.
std::optional<HeaderCondition> parse_condition(std::string_view line, std::size_t lineno) {
  const auto sp = line.find_first_of(" \t=!<>");
  const auto field = field_from_name(line.substr(0, sp));
  if (!field || sp == std::string_view::npos) return std::nullopt;
  std::string_view rest = trim(line.substr(sp));
  const auto op_end = rest.find_first_not_of("=!<>");
  const auto op = op_from_text(rest.substr(0, op_end));
  if (!op) throw ParseError(lineno, "bad operator in '" + std::string(line) + "'");
  rest = op_end == std::string_view::npos ? std::string_view{} : trim(rest.substr(op_end));
  if (rest.empty()) throw ParseError(lineno, "missing value in '" + std::string(line) + "'");

  HeaderCondition c;
  c.field = *field;
  c.op = *op;
  try {
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = std::min(rest.find(',', pos), rest.size());
      const std::string_view item = trim(rest.substr(pos, comma - pos));
      switch (c.field) {
        case HeaderField::kIpProto: c.numbers.push_back(parse_proto_value(item)); break;
        case HeaderField::kSrcPort:
        case HeaderField::kDstPort: c.numbers.push_back(parse_number(item, 65535)); break;
        case HeaderField::kSrcHost:
        case HeaderField::kDstHost: c.nets.push_back(Ipv4Net::parse(item)); break;
      }
      pos = comma + 1;
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
  const bool ordering = c.op != CmpOp::kEq && c.op != CmpOp::kNe;
  if (ordering && is_host_field(c.field)) throw ParseError(lineno, "host fields allow only == and !=");
  if (ordering && c.numbers.size() > 1) throw ParseError(lineno, "value list needs == or !=");
  return c;
}

bool is_action(std::string_view line) {
  return line.starts_with("enable ") || line.starts_with("event ") || line == "enable" || line == "event";
}

}  // namespace

std::string_view to_string(HeaderField f) {
  switch (f) {
    case HeaderField::kIpProto: return "ip-proto";
    case HeaderField::kSrcHost: return "src-ip";
    case HeaderField::kDstHost: return "dst-ip";
    case HeaderField::kSrcPort: return "src-port";
    case HeaderField::kDstPort: return "dst-port";
  }
  return "?";
}

std::string_view to_string(CmpOp op) {
  switch (op) {
    case CmpOp::kEq: return "==";
    case CmpOp::kNe: return "!=";
    case CmpOp::kLt: return "<";
    case CmpOp::kLe: return "<=";
    case CmpOp::kGt: return ">";
    case CmpOp::kGe: return ">=";
  }
  return "?";
}

bool HeaderCondition::holds_value(std::uint32_t v) const {
  const bool any = std::any_of(numbers.begin(), numbers.end(),
                               [&](std::uint32_t n) { return compare(v, CmpOp::kEq, n); });
  if (op == CmpOp::kEq) return any;
  if (op == CmpOp::kNe) return !any;
  return compare(v, op, numbers.front());
}

bool HeaderCondition::holds(const FlowHeader& h) const {
  switch (field) {
    case HeaderField::kIpProto: return holds_value(h.ip_proto);
    case HeaderField::kSrcPort: return holds_value(h.src_port);
    case HeaderField::kDstPort: return holds_value(h.dst_port);
    case HeaderField::kSrcHost:
    case HeaderField::kDstHost: {
      const Ipv4 a = field == HeaderField::kSrcHost ? h.src_host : h.dst_host;
      const bool any = std::any_of(nets.begin(), nets.end(), [&](const Ipv4Net& n) { return n.contains(a); });
      return op == CmpOp::kEq ? any : !any;
    }
  }
  return false;
}

std::string HeaderCondition::to_string() const {
  std::string s(signatures::to_string(field));
  s += ' ';
  s += signatures::to_string(op);
  s += ' ';
  bool first = true;
  auto sep = [&] {
    if (!first) s += ',';
    first = false;
  };
  for (std::uint32_t n : numbers) {
    sep();
    s += field == HeaderField::kIpProto ? proto_name(n) : std::to_string(n);
  }
  for (const Ipv4Net& n : nets) {
    sep();
    s += n.prefix == 32 ? n.base.to_string() : n.to_string();
  }
  return s;
}

bool SignatureRule::header_matches(const FlowHeader& h) const {
  return std::all_of(header_conditions.begin(), header_conditions.end(),
                     [&](const HeaderCondition& c) { return c.holds(h); });
}

std::vector<SignatureRule> parse_ruleset(std::string_view text) {
  std::vector<SignatureRule> rules;
  std::set<std::string> seen;
  std::optional<SignatureRule> cur;
  bool awaiting_brace = false;
  std::size_t block_line = 0;
  std::size_t lineno = 0;

  auto begin_block = [&] {
    if (!seen.insert(cur->id).second) throw ParseError(block_line, "duplicate signature id '" + cur->id + "'");
    awaiting_brace = false;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++lineno;
    if (line.empty() || line.front() == '#') continue;

    if (awaiting_brace) {
      if (line != "{") throw ParseError(lineno, "expected '{' after signature header");
      begin_block();
      continue;
    }
    if (!cur) {
      if (!line.starts_with("signature")) throw ParseError(lineno, "expected 'signature <id> {'");
      std::string_view rest = trim(line.substr(9));
      if (line.size() > 9 && line[9] != ' ' && line[9] != '\t' && line[9] != '{') {
        throw ParseError(lineno, "expected 'signature <id> {'");
      }
      bool brace = false;
      if (rest.ends_with('{')) {
        brace = true;
        rest = trim(rest.substr(0, rest.size() - 1));
      }
      if (rest.empty()) throw ParseError(lineno, "signature without id");
      if (rest.find_first_of(" \t{}") != std::string_view::npos) throw ParseError(lineno, "malformed signature id");
      cur.emplace();
      cur->id = std::string(rest);
      block_line = lineno;
      awaiting_brace = true;
      if (brace) begin_block();
      continue;
    }
    if (line == "}") {
      rules.push_back(std::move(*cur));
      cur.reset();
      continue;
    }
    if (line.find_first_of("{}") != std::string_view::npos && !line.starts_with("payload")) {
      throw ParseError(lineno, "unbalanced braces");
    }
    if (line.starts_with("payload")) {
      if (cur->payload_regex) throw ParseError(lineno, "second payload line in signature '" + cur->id + "'");
      const std::string_view rest = trim(line.substr(7));
      if (rest.size() < 2 || rest.front() != '/' || rest.back() != '/') {
        throw ParseError(lineno, "payload pattern must be /-delimited");
      }
      const std::string_view body = rest.substr(1, rest.size() - 2);
      try {
        cur->payload_regex = parse_regex(body);
      } catch (const RegexSyntaxError& e) {
        throw ParseError(lineno, e.what());
      }
      cur->payload_source = std::string(body);
      continue;
    }
    if (auto c = parse_condition(line, lineno)) {
      cur->header_conditions.push_back(std::move(*c));
    } else if (is_action(line)) {
      cur->actions.emplace_back(line);
    } else {
      cur->options.emplace_back(line);
    }
  }
  if (cur) throw ParseError(block_line, "unbalanced braces: signature '" + cur->id + "' is never closed");
  return rules;
}

std::string format_rule(const SignatureRule& rule) {
  std::ostringstream os;
  os << "signature " << rule.id << " {\n";
  for (const HeaderCondition& c : rule.header_conditions) os << "  " << c.to_string() << '\n';
  if (rule.payload_regex) {
    const std::string src = rule.payload_source.empty() ? to_pattern(*rule.payload_regex) : rule.payload_source;
    os << "  payload /" << src << "/\n";
  }
  for (const std::string& o : rule.options) os << "  " << o << '\n';
  for (const std::string& a : rule.actions) os << "  " << a << '\n';
  os << "}\n";
  return os.str();
}

std::string format_ruleset(const std::vector<SignatureRule>& rules) {
  std::string out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i) out += '\n';
    out += format_rule(rules[i]);
  }
  return out;
}

RegexAst regex_union(RegexAst r1, RegexAst r2) {
  std::vector<RegexAst> alts;
  alts.push_back(std::move(r1));
  alts.push_back(std::move(r2));
  return ast::alt(std::move(alts));
}

SignatureRule make_rule(std::string id, std::string_view pattern, const SignatureRule& like) {
  SignatureRule r;
  r.id = std::move(id);
  r.header_conditions = like.header_conditions;
  r.actions = like.actions;
  r.payload_regex = parse_regex(pattern);
  r.payload_source = std::string(pattern);
  return r;
}

}  // namespace rnnids::signatures
