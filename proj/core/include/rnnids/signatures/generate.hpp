#pragma once

#include <cstdint>

#include "rnnids/bytes.hpp"
#include "rnnids/signatures/regex_ast.hpp"

namespace rnnids::signatures {

inline constexpr std::size_t kDefaultMaxGeneratedLength = 256;

// Draws a member of L(ast) no longer than `max_len`. Union branches are
// chosen uniformly among those that still fit; Star/Plus counts are geometric
// with p = 0.5 and truncated to the remaining length budget; bounded Repeat
// counts are uniform. Deterministic in `rng_seed`.
// Throws GenerationImpossible for an empty language, when no member fits, or
// when the anchors cannot be honoured.
Bytes generate_matching(const RegexAst& ast, std::uint64_t rng_seed,
                        std::size_t max_len = kDefaultMaxGeneratedLength);

}  // namespace rnnids::signatures
