#include "rnnids/signatures/regex_parser.hpp"

#include <cctype>
#include <string>

#include "rnnids/error.hpp"

namespace rnnids::signatures {

namespace {

using Kind = RegexAst::Kind;

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

ByteSet range_set(int lo, int hi) {
  ByteSet s;
  for (int c = lo; c <= hi; ++c) s.set(c);
  return s;
}

ByteSet digit_set() { return range_set('0', '9'); }
ByteSet word_set() { return range_set('a', 'z') | range_set('A', 'Z') | digit_set() | range_set('_', '_'); }
ByteSet space_set() {
  ByteSet s;
  for (char c : std::string(" \t\n\r\f\v")) s.set(static_cast<std::uint8_t>(c));
  return s;
}

class Parser {
 public:
  explicit Parser(std::string_view p) : p_(p) {}

  RegexAst parse() {
    RegexAst r = parse_union();
    if (pos_ < p_.size()) {
      // only ')' can stop parse_union early
      fail("unbalanced ')'");
    }
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw RegexSyntaxError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const { throw RegexSyntaxError(pos, msg); }

  bool at_end() const { return pos_ >= p_.size(); }
  char peek() const { return p_[pos_]; }

  RegexAst parse_union() {
    std::vector<RegexAst> alts;
    alts.push_back(parse_concat());
    while (!at_end() && peek() == '|') {
      ++pos_;
      alts.push_back(parse_concat());
    }
    if (alts.size() == 1) return std::move(alts[0]);
    return ast::alt(std::move(alts));
  }

  RegexAst parse_concat() {
    std::vector<RegexAst> items;
    while (!at_end() && peek() != '|' && peek() != ')') items.push_back(parse_repeat());
    if (items.empty()) return ast::epsilon();
    if (items.size() == 1) return std::move(items[0]);
    return ast::concat(std::move(items));
  }

  RegexAst parse_repeat() {
    RegexAst atom = parse_atom();
    while (!at_end()) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        atom = ast::star(std::move(atom));
      } else if (c == '+') {
        ++pos_;
        atom = ast::plus(std::move(atom));
      } else if (c == '?') {
        ++pos_;
        atom = ast::optional(std::move(atom));
      } else if (c == '{') {
        atom = parse_braces(std::move(atom));
      } else {
        break;
      }
    }
    return atom;
  }

  int parse_count() {
    const std::size_t start = pos_;
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > kMaxRepeat) fail_at(start, "repetition count exceeds " + std::to_string(kMaxRepeat));
      ++pos_;
    }
    if (pos_ == start) fail("expected a repetition count");
    return static_cast<int>(v);
  }

  RegexAst parse_braces(RegexAst atom) {
    const std::size_t open = pos_;
    ++pos_;  // '{'
    const int min = parse_count();
    int max = min;
    if (!at_end() && peek() == ',') {
      ++pos_;
      if (!at_end() && peek() == '}') {
        max = RegexAst::kUnbounded;
      } else {
        max = parse_count();
      }
    }
    if (at_end() || peek() != '}') fail_at(open, "unterminated repetition");
    ++pos_;
    if (max != RegexAst::kUnbounded && max < min) fail_at(open, "repetition bounds out of order");
    return ast::repeat(std::move(atom), min, max);
  }

  RegexAst parse_atom() {
    const char c = peek();
    switch (c) {
      case '(': {
        const std::size_t open = pos_;
        ++pos_;
        RegexAst inner = parse_union();
        if (at_end() || peek() != ')') fail_at(open, "unbalanced '('");
        ++pos_;
        return inner;
      }
      case '[':
        return parse_class();
      case '.':
        ++pos_;
        return ast::dot();
      case '^':
        ++pos_;
        return ast::anchor_start();
      case '$':
        ++pos_;
        return ast::anchor_end();
      case '\\':
        return parse_escape_atom();
      case '*':
      case '+':
      case '?':
      case '{':
        fail(std::string("nothing to repeat before '") + c + "'");
      default:
        ++pos_;
        return ast::literal(static_cast<std::uint8_t>(c));
    }
  }

  struct Escape {
    bool is_set = false;
    std::uint8_t octet = 0;
    ByteSet set;
  };

  // pos_ at the backslash.
  Escape parse_escape() {
    const std::size_t start = pos_;
    ++pos_;
    if (at_end()) fail_at(start, "dangling escape");
    const char c = peek();
    ++pos_;
    Escape e;
    switch (c) {
      case 'x': {
        if (pos_ + 2 > p_.size()) fail_at(start, "\\x needs two hex digits");
        const int hi = hex_digit(p_[pos_]);
        const int lo = hex_digit(p_[pos_ + 1]);
        if (hi < 0 || lo < 0) fail_at(start, "\\x needs two hex digits");
        pos_ += 2;
        e.octet = static_cast<std::uint8_t>(hi << 4 | lo);
        return e;
      }
      case 'n': e.octet = '\n'; return e;
      case 'r': e.octet = '\r'; return e;
      case 't': e.octet = '\t'; return e;
      case 'f': e.octet = '\f'; return e;
      case 'v': e.octet = '\v'; return e;
      case '0': e.octet = 0; return e;
      case 'd': e.is_set = true; e.set = digit_set(); return e;
      case 'D': e.is_set = true; e.set = ~digit_set(); return e;
      case 'w': e.is_set = true; e.set = word_set(); return e;
      case 'W': e.is_set = true; e.set = ~word_set(); return e;
      case 's': e.is_set = true; e.set = space_set(); return e;
      case 'S': e.is_set = true; e.set = ~space_set(); return e;
      default:
        if (std::isalnum(static_cast<unsigned char>(c))) {
          fail_at(start, std::string("unknown escape \\") + c);
        }
        e.octet = static_cast<std::uint8_t>(c);
        return e;
    }
  }

  RegexAst parse_escape_atom() {
    Escape e = parse_escape();
    if (e.is_set) return ast::char_class(e.set);
    return ast::literal(e.octet);
  }

  RegexAst parse_class() {
    const std::size_t open = pos_;
    ++pos_;  // '['
    bool negated = false;
    if (!at_end() && peek() == '^') {
      negated = true;
      ++pos_;
    }
    ByteSet set;
    bool first = true;
    while (true) {
      if (at_end()) fail_at(open, "unterminated character class");
      if (peek() == ']' && !first) {
        ++pos_;
        break;
      }
      first = false;
      const std::size_t item_pos = pos_;
      Escape lo = class_item();
      if (lo.is_set) {
        set |= lo.set;
        continue;
      }
      // a range needs '-' followed by something other than the closing ']'
      if (pos_ + 1 < p_.size() && peek() == '-' && p_[pos_ + 1] != ']') {
        ++pos_;
        Escape hi = class_item();
        if (hi.is_set) fail_at(item_pos, "class escape cannot end a range");
        if (hi.octet < lo.octet) fail_at(item_pos, "inverted range in character class");
        set |= range_set(lo.octet, hi.octet);
      } else {
        set.set(lo.octet);
      }
    }
    if ((negated ? ~set : set).none()) fail_at(open, "character class matches nothing");
    return ast::char_class(set, negated);
  }

  Escape class_item() {
    if (peek() == '\\') return parse_escape();
    Escape e;
    e.octet = static_cast<std::uint8_t>(peek());
    ++pos_;
    return e;
  }

  std::string_view p_;
  std::size_t pos_ = 0;
};

}  // namespace

RegexAst parse_regex(std::string_view pattern) { return Parser(pattern).parse(); }

}  // namespace rnnids::signatures
