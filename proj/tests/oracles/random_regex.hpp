#pragma once

// Random small regex trees over a two-letter alphabet for property tests.

#include <cstdint>
#include <vector>

#include "rnnids/rng.hpp"
#include "rnnids/signatures/regex_ast.hpp"

namespace rnnids::oracle {

struct RandomRegexOptions {
  int max_depth = 4;
  bool anchors = true;
  bool empty_language = false;  // allow the Empty node, which has no syntax
};

inline signatures::RegexAst random_regex(Rng& rng, const RandomRegexOptions& opt, int depth = 0) {
  namespace ast = signatures::ast;
  const bool leaf = depth >= opt.max_depth || rng.coin(0.3);
  if (leaf) {
    switch (rng.below(opt.anchors ? 9 : 7)) {
      case 0:
      case 1: return ast::literal('a');
      case 2: return ast::literal('b');
      case 3: return ast::char_class({'a', 'b'});
      case 4: return ast::char_class({'a'}, true);
      case 5: return ast::dot();
      case 6: return opt.empty_language && rng.coin(0.3) ? ast::empty() : ast::epsilon();
      case 7: return ast::anchor_start();
      default: return ast::anchor_end();
    }
  }
  auto sub = [&] { return random_regex(rng, opt, depth + 1); };
  switch (rng.below(7)) {
    case 0:
    case 1: {
      std::vector<signatures::RegexAst> c;
      const auto n = 2 + rng.below(2);
      for (std::uint64_t i = 0; i < n; ++i) c.push_back(sub());
      return ast::concat(std::move(c));
    }
    case 2: {
      std::vector<signatures::RegexAst> c;
      const auto n = 2 + rng.below(2);
      for (std::uint64_t i = 0; i < n; ++i) c.push_back(sub());
      return ast::alt(std::move(c));
    }
    case 3: return ast::star(sub());
    case 4: return ast::plus(sub());
    case 5: return ast::optional(sub());
    default: {
      const int lo = static_cast<int>(rng.below(3));
      const int hi = rng.coin(0.25) ? signatures::RegexAst::kUnbounded : lo + static_cast<int>(rng.below(3));
      return ast::repeat(sub(), lo, hi);
    }
  }
}

}  // namespace rnnids::oracle
