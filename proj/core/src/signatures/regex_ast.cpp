#include "rnnids/signatures/regex_ast.hpp"

#include <stdexcept>

namespace rnnids::signatures {

using Kind = RegexAst::Kind;

ByteSet RegexAst::matched_octets() const {
  switch (kind) {
    case Kind::kLiteral: {
      ByteSet s;
      s.set(literal);
      return s;
    }
    case Kind::kCharClass:
      return negated ? ~set : set;
    case Kind::kDot:
      return ByteSet().set();
    default:
      return {};
  }
}

namespace ast {

namespace {
RegexAst make(Kind k) {
  RegexAst n;
  n.kind = k;
  return n;
}
RegexAst unary(Kind k, RegexAst child) {
  RegexAst n = make(k);
  n.children.push_back(std::move(child));
  return n;
}
}  // namespace

RegexAst empty() { return make(Kind::kEmpty); }
RegexAst epsilon() { return make(Kind::kEpsilon); }
RegexAst literal(std::uint8_t c) {
  RegexAst n = make(Kind::kLiteral);
  n.literal = c;
  return n;
}
RegexAst char_class(const ByteSet& set, bool negated) {
  RegexAst n = make(Kind::kCharClass);
  n.set = set;
  n.negated = negated;
  return n;
}
RegexAst char_class(std::initializer_list<std::uint8_t> members, bool negated) {
  ByteSet s;
  for (auto m : members) s.set(m);
  return char_class(s, negated);
}
RegexAst dot() { return make(Kind::kDot); }
RegexAst concat(std::vector<RegexAst> children) {
  RegexAst n = make(Kind::kConcat);
  n.children = std::move(children);
  return n;
}
RegexAst alt(std::vector<RegexAst> children) {
  RegexAst n = make(Kind::kUnion);
  n.children = std::move(children);
  return n;
}
RegexAst star(RegexAst child) { return unary(Kind::kStar, std::move(child)); }
RegexAst plus(RegexAst child) { return unary(Kind::kPlus, std::move(child)); }
RegexAst optional(RegexAst child) { return unary(Kind::kOptional, std::move(child)); }
RegexAst repeat(RegexAst child, int min, int max) {
  RegexAst n = unary(Kind::kRepeat, std::move(child));
  n.min = min;
  n.max = max;
  return n;
}
RegexAst anchor_start() { return make(Kind::kAnchorStart); }
RegexAst anchor_end() { return make(Kind::kAnchorEnd); }
RegexAst text(const std::string& s) {
  if (s.empty()) return epsilon();
  if (s.size() == 1) return literal(static_cast<std::uint8_t>(s[0]));
  std::vector<RegexAst> parts;
  for (char c : s) parts.push_back(literal(static_cast<std::uint8_t>(c)));
  return concat(std::move(parts));
}

}  // namespace ast

namespace {

constexpr char kHex[] = "0123456789abcdef";

bool printable(std::uint8_t c) { return c >= 0x20 && c < 0x7f; }

std::string hex_escape(std::uint8_t c) { return std::string("\\x") + kHex[c >> 4] + kHex[c & 15]; }

std::string literal_text(std::uint8_t c) {
  static const std::string kSpecial = "\\.|*+?()[]{}^$/";
  if (!printable(c)) return hex_escape(c);
  if (kSpecial.find(static_cast<char>(c)) != std::string::npos) return std::string("\\") + static_cast<char>(c);
  return std::string(1, static_cast<char>(c));
}

std::string class_member(std::uint8_t c) {
  static const std::string kSpecial = "\\]^-[/";
  if (!printable(c)) return hex_escape(c);
  if (kSpecial.find(static_cast<char>(c)) != std::string::npos) return std::string("\\") + static_cast<char>(c);
  return std::string(1, static_cast<char>(c));
}

std::string class_text(const RegexAst& n) {
  std::string out = n.negated ? "[^" : "[";
  int c = 0;
  while (c < 256) {
    if (!n.set.test(c)) {
      ++c;
      continue;
    }
    int end = c;
    while (end + 1 < 256 && n.set.test(end + 1)) ++end;
    out += class_member(static_cast<std::uint8_t>(c));
    if (end >= c + 2) {
      out += '-';
      out += class_member(static_cast<std::uint8_t>(end));
    } else if (end == c + 1) {
      out += class_member(static_cast<std::uint8_t>(end));
    }
    c = end + 1;
  }
  return out + "]";
}

bool is_atom(const RegexAst& n) {
  switch (n.kind) {
    case Kind::kEpsilon:
    case Kind::kLiteral:
    case Kind::kCharClass:
    case Kind::kDot:
    case Kind::kAnchorStart:
    case Kind::kAnchorEnd:
      return true;
    default:
      return false;
  }
}

std::string print(const RegexAst& n);

std::string group(const RegexAst& n) { return "(" + print(n) + ")"; }

std::string print(const RegexAst& n) {
  switch (n.kind) {
    case Kind::kEmpty:
      throw std::invalid_argument("the empty language has no pattern syntax");
    case Kind::kEpsilon:
      return "()";
    case Kind::kLiteral:
      return literal_text(n.literal);
    case Kind::kCharClass:
      return class_text(n);
    case Kind::kDot:
      return ".";
    case Kind::kAnchorStart:
      return "^";
    case Kind::kAnchorEnd:
      return "$";
    case Kind::kConcat: {
      std::string out;
      for (const auto& c : n.children) {
        const bool wrap = c.kind == Kind::kConcat || c.kind == Kind::kUnion;
        out += wrap ? group(c) : print(c);
      }
      return out;
    }
    case Kind::kUnion: {
      std::string out;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += '|';
        const auto& c = n.children[i];
        out += c.kind == Kind::kUnion ? group(c) : print(c);
      }
      return out;
    }
    case Kind::kStar:
    case Kind::kPlus:
    case Kind::kOptional:
    case Kind::kRepeat: {
      const auto& c = n.children.at(0);
      std::string out = is_atom(c) ? print(c) : group(c);
      if (n.kind == Kind::kStar) return out + '*';
      if (n.kind == Kind::kPlus) return out + '+';
      if (n.kind == Kind::kOptional) return out + '?';
      out += '{' + std::to_string(n.min);
      if (n.max == RegexAst::kUnbounded) {
        out += ',';
      } else if (n.max != n.min) {
        out += ',' + std::to_string(n.max);
      }
      return out + '}';
    }
  }
  return {};
}

std::size_t saturating_add(std::size_t a, std::size_t b) { return a > kInfinite - b ? kInfinite : a + b; }

std::size_t saturating_mul(std::size_t a, std::size_t k) {
  if (k == 0) return 0;
  if (a == kInfinite) return kInfinite;
  return a > kInfinite / k ? kInfinite : a * k;
}

}  // namespace

std::string to_pattern(const RegexAst& node) { return print(node); }

std::size_t min_length(const RegexAst& n) {
  switch (n.kind) {
    case Kind::kEmpty:
      return kInfinite;
    case Kind::kEpsilon:
    case Kind::kAnchorStart:
    case Kind::kAnchorEnd:
    case Kind::kStar:
    case Kind::kOptional:
      return 0;
    case Kind::kLiteral:
    case Kind::kDot:
      return 1;
    case Kind::kCharClass:
      return n.matched_octets().none() ? kInfinite : 1;
    case Kind::kConcat: {
      std::size_t total = 0;
      for (const auto& c : n.children) total = saturating_add(total, min_length(c));
      return total;
    }
    case Kind::kUnion: {
      std::size_t best = kInfinite;
      for (const auto& c : n.children) best = std::min(best, min_length(c));
      return best;
    }
    case Kind::kPlus:
      return min_length(n.children.at(0));
    case Kind::kRepeat:
      return saturating_mul(min_length(n.children.at(0)), static_cast<std::size_t>(n.min));
  }
  return kInfinite;
}

std::size_t node_count(const RegexAst& node) {
  std::size_t n = 1;
  for (const auto& c : node.children) n += node_count(c);
  return n;
}

}  // namespace rnnids::signatures
