#include "rnnids/signatures/generate.hpp"

#include <algorithm>
#include <unordered_map>

#include "rnnids/error.hpp"
#include "rnnids/rng.hpp"

namespace rnnids::signatures {

namespace {

using Kind = RegexAst::Kind;

constexpr int kMaxAttempts = 1000;

struct AnchorViolation {};

class Generator {
 public:
  Generator(Rng& rng) : rng_(rng) {}

  void run(const RegexAst& n, std::size_t budget) {
    out_.clear();
    ended_ = false;
    emit(n, budget);
  }

  Bytes take() { return std::move(out_); }

 private:
  std::size_t minlen(const RegexAst& n) {
    auto it = cache_.find(&n);
    if (it != cache_.end()) return it->second;
    const std::size_t v = min_length(n);
    cache_.emplace(&n, v);
    return v;
  }

  void put(std::uint8_t b) {
    if (ended_) throw AnchorViolation{};
    out_.push_back(b);
  }

  std::uint8_t pick(const ByteSet& s) {
    std::size_t k = rng_.below(s.count());
    for (int b = 0; b < 256; ++b) {
      if (s.test(b) && k-- == 0) return static_cast<std::uint8_t>(b);
    }
    return 0;
  }

  // Repetition count in [lo, hi] for a body of minimum length `unit`, within `budget`.
  std::size_t fit_count(std::size_t lo, std::size_t hi, std::size_t unit, std::size_t budget) {
    if (unit > 0) hi = std::min(hi, budget / unit);
    return std::max(lo, hi);
  }

  void repeat(const RegexAst& body, std::size_t count, std::size_t budget) {
    const std::size_t unit = minlen(body);
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t reserve = unit * (count - i - 1);
      emit(body, budget - reserve);
      budget -= std::min(budget, last_len_);
    }
  }

  // Appends a member of L(n) with length <= budget; minlen(n) <= budget holds.
  void emit(const RegexAst& n, std::size_t budget) {
    const std::size_t before = out_.size();
    switch (n.kind) {
      case Kind::kEmpty:
        throw GenerationImpossible("empty language");
      case Kind::kEpsilon:
        break;
      case Kind::kLiteral:
      case Kind::kCharClass:
      case Kind::kDot:
        put(pick(n.matched_octets()));
        break;
      case Kind::kAnchorStart:
        if (!out_.empty()) throw AnchorViolation{};
        break;
      case Kind::kAnchorEnd:
        ended_ = true;
        break;
      case Kind::kConcat: {
        std::size_t rest = 0;
        for (const RegexAst& c : n.children) rest += minlen(c);
        std::size_t left = budget;
        for (const RegexAst& c : n.children) {
          rest -= minlen(c);
          emit(c, left - rest);
          left -= last_len_;
        }
        break;
      }
      case Kind::kUnion: {
        std::vector<const RegexAst*> fits;
        for (const RegexAst& c : n.children) {
          if (minlen(c) <= budget) fits.push_back(&c);
        }
        emit(*fits[rng_.below(fits.size())], budget);
        break;
      }
      case Kind::kStar:
      case Kind::kPlus: {
        const std::size_t lo = n.kind == Kind::kPlus ? 1 : 0;
        const std::size_t want = lo + rng_.geometric(0.5);
        const std::size_t count = std::min(want, fit_count(lo, want, minlen(n.children[0]), budget));
        repeat(n.children[0], count, budget);
        break;
      }
      case Kind::kOptional:
        if (minlen(n.children[0]) <= budget && rng_.coin()) emit(n.children[0], budget);
        break;
      case Kind::kRepeat: {
        const auto lo = static_cast<std::size_t>(n.min);
        std::size_t count;
        if (n.max == RegexAst::kUnbounded) {
          count = lo + rng_.geometric(0.5);
        } else {
          count = static_cast<std::size_t>(rng_.between(n.min, n.max));
        }
        count = std::min(count, fit_count(lo, count, minlen(n.children[0]), budget));
        repeat(n.children[0], count, budget);
        break;
      }
    }
    last_len_ = out_.size() - before;
  }

  Rng& rng_;
  Bytes out_;
  bool ended_ = false;
  std::size_t last_len_ = 0;
  std::unordered_map<const RegexAst*, std::size_t> cache_;
};

}  // namespace

Bytes generate_matching(const RegexAst& ast, std::uint64_t rng_seed, std::size_t max_len) {
  const std::size_t need = min_length(ast);
  if (need == kInfinite) throw GenerationImpossible("pattern denotes the empty language");
  if (need > max_len) {
    throw GenerationImpossible("shortest member has " + std::to_string(need) + " octets, limit is " +
                               std::to_string(max_len));
  }
  Rng rng(rng_seed);
  Generator gen(rng);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    try {
      gen.run(ast, max_len);
      return gen.take();
    } catch (const AnchorViolation&) {
    }
  }
  throw GenerationImpossible("anchors could not be satisfied in " + std::to_string(kMaxAttempts) +
                             " attempts");
}

}  // namespace rnnids::signatures
