#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rnnids/bytes.hpp"
#include "rnnids/signatures/regex_ast.hpp"

namespace rnnids::signatures {

inline constexpr std::size_t kDefaultDfaStateCap = 100000;

// Total deterministic automaton over octets. Transitions are stored per byte
// equivalence class; next() resolves the class, so delta is total over 256.
// State 0 is the dead state. Compiled automata are immutable.
class Dfa {
 public:
  using State = std::uint32_t;
  static constexpr State kDead = 0;

  std::size_t state_count() const { return accepting_.size(); }
  std::size_t class_count() const { return class_count_; }
  State start() const { return start_; }
  bool accepting(State s) const { return accepting_[s] != 0; }
  State next(State s, std::uint8_t octet) const {
    return table_[static_cast<std::size_t>(s) * class_count_ + byte_class_[octet]];
  }

  // True iff the whole payload is in the compiled language.
  bool matches(ByteView payload) const;

 private:
  friend Dfa compile(const RegexAst&, std::size_t);

  std::array<std::uint16_t, 256> byte_class_{};
  std::size_t class_count_ = 1;
  std::vector<State> table_;
  std::vector<std::uint8_t> accepting_;
  // Accepting and closed under every octet: scanning may stop early.
  std::vector<std::uint8_t> sink_;
  State start_ = 0;
};

// `^`/`$` bind to payload start/end; anything unanchored is a substring search.
// Throws DfaTooLarge when subset construction exceeds `state_cap`.
Dfa compile(const RegexAst& ast, std::size_t state_cap = kDefaultDfaStateCap);

inline bool match_payload(const Dfa& dfa, ByteView payload) { return dfa.matches(payload); }

}  // namespace rnnids::signatures
