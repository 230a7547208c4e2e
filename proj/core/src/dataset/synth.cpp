#include "rnnids/dataset/synth.hpp"

#include <algorithm>
#include <optional>

#include "rnnids/error.hpp"
#include "rnnids/rng.hpp"

namespace rnnids::dataset {

namespace {

using signatures::CmpOp;
using signatures::HeaderCondition;
using signatures::HeaderField;
using signatures::SignatureRule;

constexpr int kHeaderAttempts = 200;
// Victims when the benign side has no hosts to offer.
const Ipv4Net kFallbackVictims = Ipv4Net::parse("198.51.100.0/24");

std::vector<const HeaderCondition*> conditions_on(const SignatureRule& r, HeaderField f) {
  std::vector<const HeaderCondition*> out;
  for (const HeaderCondition& c : r.header_conditions) {
    if (c.field == f) out.push_back(&c);
  }
  return out;
}

// Proposes a value for a numeric field: a listed value when an == condition
// exists, otherwise something inside the range the ordering operators allow.
std::uint32_t propose_number(const std::vector<const HeaderCondition*>& conds, std::uint32_t lo, std::uint32_t hi,
                             Rng& rng) {
  for (const HeaderCondition* c : conds) {
    if (c->op == CmpOp::kEq) return c->numbers[rng.below(c->numbers.size())];
  }
  std::int64_t a = lo;
  std::int64_t b = hi;
  for (const HeaderCondition* c : conds) {
    const std::int64_t v = c->numbers.front();
    switch (c->op) {
      case CmpOp::kLt: b = std::min(b, v - 1); break;
      case CmpOp::kLe: b = std::min(b, v); break;
      case CmpOp::kGt: a = std::max(a, v + 1); break;
      case CmpOp::kGe: a = std::max(a, v); break;
      default: break;
    }
  }
  if (a > b) return lo;
  return static_cast<std::uint32_t>(rng.between(a, b));
}

Ipv4 propose_host(const std::vector<const HeaderCondition*>& conds, const std::vector<Ipv4>& fallback, Rng& rng) {
  for (const HeaderCondition* c : conds) {
    if (c->op == CmpOp::kEq) {
      const Ipv4Net& net = c->nets[rng.below(c->nets.size())];
      return net.at(rng.below(net.size()));
    }
  }
  return fallback[rng.below(fallback.size())];
}

std::optional<FlowRecord> choose_header(const SignatureRule& r, const std::vector<Ipv4>& pool,
                                        const std::vector<Ipv4>& victims, Rng& rng) {
  const auto proto_c = conditions_on(r, HeaderField::kIpProto);
  const auto sport_c = conditions_on(r, HeaderField::kSrcPort);
  const auto dport_c = conditions_on(r, HeaderField::kDstPort);
  const auto dst_c = conditions_on(r, HeaderField::kDstHost);
  for (int attempt = 0; attempt < kHeaderAttempts; ++attempt) {
    const std::uint32_t proto = proto_c.empty() ? (rng.coin() ? 6u : 17u) : propose_number(proto_c, 0, 255, rng);
    if (proto != 6 && proto != 17) continue;
    FlowRecord f;
    f.proto = static_cast<Proto>(proto);
    f.src_host = pool[rng.below(pool.size())];
    f.dst_host = propose_host(dst_c, victims, rng);
    f.src_port = static_cast<std::uint16_t>(propose_number(sport_c, 1024, 65535, rng));
    f.dst_port = static_cast<std::uint16_t>(propose_number(dport_c, 1, 1023, rng));
    if (r.header_matches(f.header())) return f;
  }
  return std::nullopt;
}

}  // namespace

std::set<Ipv4> expand_pool(const Ipv4Net& net) {
  std::set<Ipv4> out;
  for (std::uint64_t i = 0; i < net.size(); ++i) out.insert(net.at(i));
  return out;
}

SynthResult synth_malicious_flows(const std::vector<SignatureRule>& rules, std::size_t per_rule,
                                  const std::set<Ipv4>& pool, const std::set<Ipv4>& benign_hosts,
                                  std::uint64_t rng_seed, const SynthOptions& opts) {
  if (pool.empty()) throw InvalidConfig("malicious host pool is empty");
  std::vector<std::string> overlap;
  for (const Ipv4& a : pool) {
    if (benign_hosts.count(a)) overlap.push_back(a.to_string());
  }
  if (!overlap.empty()) {
    throw HostOverlapError(overlap, std::to_string(overlap.size()) + " pool address(es) also appear in benign traffic");
  }
  const std::vector<Ipv4> sources(pool.begin(), pool.end());
  std::vector<Ipv4> victims(benign_hosts.begin(), benign_hosts.end());
  if (victims.empty()) {
    for (std::uint64_t i = 1; i < kFallbackVictims.size() - 1; ++i) victims.push_back(kFallbackVictims.at(i));
  }

  SynthResult out;
  Rng rng(rng_seed);
  for (const SignatureRule& rule : rules) {
    if (!rule.payload_regex) {
      out.skipped.push_back({rule.id, "no payload pattern"});
      continue;
    }
    std::vector<FlowRecord> flows;
    std::string failure;
    for (std::size_t k = 0; k < per_rule && failure.empty(); ++k) {
      std::optional<FlowRecord> f = choose_header(rule, sources, victims, rng);
      if (!f) {
        failure = "header conditions cannot be met by a TCP/UDP flow from the pool";
        break;
      }
      try {
        f->payload = signatures::generate_matching(*rule.payload_regex, rng.next(), opts.max_payload_len);
      } catch (const GenerationImpossible& e) {
        failure = e.what();
        break;
      }
      f->label = Label::kMalicious;
      f->origin = rule.id;
      flows.push_back(std::move(*f));
    }
    if (!failure.empty()) {
      out.skipped.push_back({rule.id, failure});
      continue;
    }
    out.flows.insert(out.flows.end(), std::make_move_iterator(flows.begin()), std::make_move_iterator(flows.end()));
    out.used.push_back({rule.id, rule.payload_source.empty() ? signatures::to_pattern(*rule.payload_regex)
                                                             : rule.payload_source});
  }
  return out;
}

}  // namespace rnnids::dataset
