#pragma once

#include <bitset>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace rnnids::signatures {

using ByteSet = std::bitset<256>;

// Regular expression over octets. Concat and Union are n-ary; the parser
// never builds them with fewer than two children.
struct RegexAst {
  enum class Kind : std::uint8_t {
    kEmpty,    // the empty language
    kEpsilon,  // the empty string
    kLiteral,
    kCharClass,
    kDot,  // any octet
    kConcat,
    kUnion,
    kStar,
    kPlus,
    kOptional,
    kRepeat,
    kAnchorStart,
    kAnchorEnd,
  };
  static constexpr int kUnbounded = -1;

  Kind kind = Kind::kEpsilon;
  std::uint8_t literal = 0;
  ByteSet set;  // class members as written
  bool negated = false;
  int min = 0;
  int max = 0;  // kUnbounded for {m,}
  std::vector<RegexAst> children;

  bool operator==(const RegexAst&) const = default;

  // Octets matched by a Literal, CharClass or Dot node.
  ByteSet matched_octets() const;
};

namespace ast {

RegexAst empty();
RegexAst epsilon();
RegexAst literal(std::uint8_t c);
RegexAst char_class(const ByteSet& set, bool negated = false);
RegexAst char_class(std::initializer_list<std::uint8_t> members, bool negated = false);
RegexAst dot();
RegexAst concat(std::vector<RegexAst> children);
RegexAst alt(std::vector<RegexAst> children);
RegexAst star(RegexAst child);
RegexAst plus(RegexAst child);
RegexAst optional(RegexAst child);
RegexAst repeat(RegexAst child, int min, int max);
RegexAst anchor_start();
RegexAst anchor_end();
// Literal octet string as a concatenation.
RegexAst text(const std::string& s);

}  // namespace ast

// Concrete syntax that parse_regex() maps back to an identical tree.
// Throws std::invalid_argument for Empty, which has no syntax.
std::string to_pattern(const RegexAst& node);

// Length of the shortest member, ignoring anchors; `kInfinite` when the
// language is empty.
inline constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
std::size_t min_length(const RegexAst& node);

std::size_t node_count(const RegexAst& node);

}  // namespace rnnids::signatures
