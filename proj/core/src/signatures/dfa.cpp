#include "rnnids/signatures/dfa.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "rnnids/error.hpp"

namespace rnnids::signatures {

namespace {

using Kind = RegexAst::Kind;

struct NfaState {
  enum class Type : std::uint8_t { kByte, kSplit, kBol, kEol, kMatch };
  Type type = Type::kSplit;
  ByteSet set;
  int out = -1;
  int out2 = -1;
};

// Thompson fragment: entry state plus the unpatched exits (state, slot).
struct Frag {
  int start;
  std::vector<std::pair<int, int>> exits;
};

class NfaBuilder {
 public:
  std::vector<NfaState> states;

  int add(NfaState s) {
    states.push_back(s);
    return static_cast<int>(states.size()) - 1;
  }

  void patch(const Frag& f, int target) {
    for (auto [s, slot] : f.exits) (slot == 0 ? states[s].out : states[s].out2) = target;
  }

  Frag single(NfaState::Type type, ByteSet set = {}) {
    NfaState s;
    s.type = type;
    s.set = set;
    const int id = add(s);
    return {id, {{id, 0}}};
  }

  Frag epsilon() { return single(NfaState::Type::kSplit); }

  Frag seq(Frag a, Frag b) {
    patch(a, b.start);
    return {a.start, std::move(b.exits)};
  }

  Frag star(Frag body) {
    const int s = add({NfaState::Type::kSplit, {}, body.start, -1});
    patch(body, s);
    return {s, {{s, 1}}};
  }

  Frag optional(Frag body) {
    const int s = add({NfaState::Type::kSplit, {}, body.start, -1});
    body.exits.emplace_back(s, 1);
    return {s, std::move(body.exits)};
  }

  Frag build(const RegexAst& n) {
    switch (n.kind) {
      case Kind::kEmpty: {
        // a byte state that accepts nothing never reaches its exit
        const int id = add({NfaState::Type::kByte, {}, -1, -1});
        return {id, {}};
      }
      case Kind::kEpsilon:
        return epsilon();
      case Kind::kLiteral:
      case Kind::kCharClass:
      case Kind::kDot:
        return single(NfaState::Type::kByte, n.matched_octets());
      case Kind::kAnchorStart:
        return single(NfaState::Type::kBol);
      case Kind::kAnchorEnd:
        return single(NfaState::Type::kEol);
      case Kind::kConcat: {
        Frag f = build(n.children.front());
        for (std::size_t i = 1; i < n.children.size(); ++i) f = seq(std::move(f), build(n.children[i]));
        return f;
      }
      case Kind::kUnion: {
        Frag f = build(n.children.back());
        for (std::size_t i = n.children.size() - 1; i-- > 0;) {
          Frag left = build(n.children[i]);
          const int s = add({NfaState::Type::kSplit, {}, left.start, f.start});
          left.exits.insert(left.exits.end(), f.exits.begin(), f.exits.end());
          f = {s, std::move(left.exits)};
        }
        return f;
      }
      case Kind::kStar:
        return star(build(n.children[0]));
      case Kind::kPlus: {
        Frag body = build(n.children[0]);
        const int entry = body.start;
        Frag loop = star(std::move(body));
        return {entry, std::move(loop.exits)};
      }
      case Kind::kOptional:
        return optional(build(n.children[0]));
      case Kind::kRepeat: {
        Frag f = epsilon();
        for (int i = 0; i < n.min; ++i) f = seq(std::move(f), build(n.children[0]));
        if (n.max == RegexAst::kUnbounded) {
          f = seq(std::move(f), star(build(n.children[0])));
        } else {
          for (int i = n.min; i < n.max; ++i) f = seq(std::move(f), optional(build(n.children[0])));
        }
        return f;
      }
    }
    return epsilon();
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int x : v) h = (h ^ static_cast<std::uint32_t>(x)) * 0x100000001b3ull;
    return static_cast<std::size_t>(h);
  }
};

class SubsetBuilder {
 public:
  explicit SubsetBuilder(const std::vector<NfaState>& nfa) : nfa_(nfa), mark_(nfa.size(), 0) {}

  // Epsilon closure under the given assertion values. Unsatisfied `$` states
  // are kept so acceptance at end of input can be decided later.
  std::vector<int> closure(const std::vector<int>& seeds, bool bol, bool eol) {
    ++stamp_;
    std::vector<int> stack(seeds.rbegin(), seeds.rend());
    std::vector<int> kept;
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      if (s < 0 || mark_[s] == stamp_) continue;
      mark_[s] = stamp_;
      const NfaState& st = nfa_[s];
      switch (st.type) {
        case NfaState::Type::kByte:
          if (st.set.any()) kept.push_back(s);
          break;
        case NfaState::Type::kMatch:
          kept.push_back(s);
          break;
        case NfaState::Type::kSplit:
          stack.push_back(st.out2);
          stack.push_back(st.out);
          break;
        case NfaState::Type::kBol:
          if (bol) stack.push_back(st.out);
          break;
        case NfaState::Type::kEol:
          if (eol) {
            stack.push_back(st.out);
          } else {
            kept.push_back(s);
          }
          break;
      }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
  }

  bool has_match(const std::vector<int>& set) const {
    return std::any_of(set.begin(), set.end(),
                       [&](int s) { return nfa_[s].type == NfaState::Type::kMatch; });
  }

  bool accepts_at_end(const std::vector<int>& set, bool at_start) {
    if (has_match(set)) return true;
    std::vector<int> eols;
    for (int s : set) {
      if (nfa_[s].type == NfaState::Type::kEol) eols.push_back(s);
    }
    return !eols.empty() && has_match(closure(eols, at_start, true));
  }

 private:
  const std::vector<NfaState>& nfa_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

}  // namespace

bool Dfa::matches(ByteView payload) const {
  State s = start_;
  for (std::uint8_t b : payload) {
    if (sink_[s]) return true;
    s = next(s, b);
    if (s == kDead) return false;
  }
  return accepting_[s] != 0;
}

Dfa compile(const RegexAst& ast, std::size_t state_cap) {
  NfaBuilder nb;
  Frag pattern = nb.build(ast);
  const int match = nb.add({NfaState::Type::kMatch, {}, -1, -1});
  nb.patch(pattern, match);
  // implicit leading any-octet loop: a match may begin at any offset
  const int any = nb.add({NfaState::Type::kByte, ByteSet{}.set(), -1, -1});
  const int loop = nb.add({NfaState::Type::kSplit, {}, pattern.start, any});
  nb.states[any].out = loop;
  const std::vector<NfaState>& nfa = nb.states;

  Dfa dfa;
  {
    std::unordered_set<ByteSet> distinct;
    for (const NfaState& s : nfa) {
      if (s.type == NfaState::Type::kByte && s.set.any() && !s.set.all()) distinct.insert(s.set);
    }
    std::vector<ByteSet> sets(distinct.begin(), distinct.end());
    std::map<std::vector<bool>, std::uint16_t> ids;
    for (int b = 0; b < 256; ++b) {
      std::vector<bool> sig(sets.size());
      for (std::size_t k = 0; k < sets.size(); ++k) sig[k] = sets[k].test(b);
      auto [it, fresh] = ids.emplace(std::move(sig), static_cast<std::uint16_t>(ids.size()));
      dfa.byte_class_[b] = it->second;
    }
    dfa.class_count_ = ids.size();
  }
  std::vector<int> rep(dfa.class_count_, -1);
  for (int b = 255; b >= 0; --b) rep[dfa.byte_class_[b]] = b;

  SubsetBuilder sb(nfa);
  const std::size_t nc = dfa.class_count_;
  // raw states before pruning; the start state is keyed apart because `^`
  // only holds there
  std::vector<std::vector<int>> sets;
  std::vector<std::uint8_t> accept;
  std::vector<std::uint8_t> sink;
  std::vector<std::uint32_t> table;
  std::unordered_map<std::vector<int>, std::uint32_t, VecHash> index;
  const std::uint32_t kNoSink = UINT32_MAX;
  std::uint32_t sink_id = kNoSink;

  auto intern = [&](std::vector<int> set, bool at_start) -> std::uint32_t {
    const bool is_sink = sb.has_match(set);
    if (is_sink && sink_id != kNoSink) return sink_id;
    if (!at_start && !is_sink) {
      auto it = index.find(set);
      if (it != index.end()) return it->second;
    }
    if (sets.size() >= state_cap) {
      throw DfaTooLarge("subset construction exceeded " + std::to_string(state_cap) + " states");
    }
    const auto id = static_cast<std::uint32_t>(sets.size());
    accept.push_back(sb.accepts_at_end(set, at_start) ? 1 : 0);
    sink.push_back(is_sink ? 1 : 0);
    if (is_sink) {
      sink_id = id;
    } else if (!at_start) {
      index.emplace(set, id);
    }
    sets.push_back(std::move(set));
    table.resize(sets.size() * nc, 0);
    return id;
  };

  intern(sb.closure({loop}, true, false), true);
  for (std::uint32_t cur = 0; cur < sets.size(); ++cur) {
    if (sink[cur]) {
      for (std::size_t c = 0; c < nc; ++c) table[cur * nc + c] = cur;
      continue;
    }
    for (std::size_t c = 0; c < nc; ++c) {
      const auto octet = static_cast<std::uint8_t>(rep[c]);
      std::vector<int> seeds;
      for (int s : sets[cur]) {
        const NfaState& st = nfa[s];
        if (st.type == NfaState::Type::kByte && st.set.test(octet)) seeds.push_back(st.out);
      }
      // sets[] may reallocate inside intern(); the index stays valid
      const std::uint32_t to = intern(sb.closure(seeds, false, false), false);
      table[cur * nc + c] = to;
    }
  }

  // states that can never reach acceptance collapse into the dead state 0
  const std::size_t n = sets.size();
  std::vector<std::vector<std::uint32_t>> preds(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < nc; ++c) preds[table[s * nc + c]].push_back(static_cast<std::uint32_t>(s));
  }
  std::vector<std::uint8_t> live(n, 0);
  std::vector<std::uint32_t> work;
  for (std::size_t s = 0; s < n; ++s) {
    if (accept[s]) {
      live[s] = 1;
      work.push_back(static_cast<std::uint32_t>(s));
    }
  }
  while (!work.empty()) {
    const std::uint32_t s = work.back();
    work.pop_back();
    for (std::uint32_t p : preds[s]) {
      if (!live[p]) {
        live[p] = 1;
        work.push_back(p);
      }
    }
  }
  std::vector<Dfa::State> remap(n, Dfa::kDead);
  Dfa::State next_id = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (live[s]) remap[s] = next_id++;
  }
  dfa.table_.assign(static_cast<std::size_t>(next_id) * nc, Dfa::kDead);
  dfa.accepting_.assign(next_id, 0);
  dfa.sink_.assign(next_id, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (!live[s]) continue;
    const Dfa::State id = remap[s];
    dfa.accepting_[id] = accept[s];
    dfa.sink_[id] = sink[s];
    for (std::size_t c = 0; c < nc; ++c) dfa.table_[id * nc + c] = remap[table[s * nc + c]];
  }
  dfa.start_ = remap[0];
  return dfa;
}

}  // namespace rnnids::signatures
