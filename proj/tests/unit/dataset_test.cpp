#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>

#include "rnnids/dataset/dataset_io.hpp"
#include "rnnids/dataset/overlay.hpp"
#include "rnnids/dataset/synth.hpp"
#include "rnnids/error.hpp"
#include "rnnids/rng.hpp"
#include "rnnids/signatures/dfa.hpp"

namespace rnnids::dataset {
namespace {

using signatures::parse_ruleset;

FlowRecord benign_flow(const char* src, const char* dst, std::int64_t ts, std::string payload = "GET / HTTP/1.1") {
  FlowRecord f;
  f.src_host = Ipv4::parse(src);
  f.dst_host = Ipv4::parse(dst);
  f.src_port = 50000;
  f.dst_port = 80;
  f.timestamp_us = ts;
  f.payload = to_bytes(payload);
  return f;
}

const std::set<Ipv4> kPool = expand_pool(Ipv4Net::parse("192.0.2.0/28"));

TEST(Synth, FlowsMatchTheirRule) {
  const auto rules = parse_ruleset("signature r {\n ip-proto == tcp\n dst-port == 22\n payload /^SSH-[12]\\./\n}\n");
  const SynthResult s = synth_malicious_flows(rules, 3, kPool, {Ipv4::parse("10.0.0.1")}, 5);
  ASSERT_EQ(s.flows.size(), 3u);
  const auto dfa = signatures::compile(*rules[0].payload_regex);
  for (const FlowRecord& f : s.flows) {
    EXPECT_TRUE(dfa.matches(f.payload));
    EXPECT_EQ(f.proto, Proto::kTcp);
    EXPECT_EQ(f.dst_port, 22);
    EXPECT_EQ(f.label, Label::kMalicious);
    EXPECT_EQ(f.origin, "r");
    EXPECT_TRUE(kPool.count(f.src_host));
    EXPECT_EQ(f.dst_host.to_string(), "10.0.0.1");
  }
  ASSERT_EQ(s.used.size(), 1u);
  EXPECT_EQ(s.used[0].pattern, "^SSH-[12]\\.");
}

TEST(Synth, SingleHostPoolIsReused) {
  const auto rules = parse_ruleset("signature r {\n payload /worm/\n}\n");
  const std::set<Ipv4> pool = {Ipv4::parse("192.0.2.7")};
  const SynthResult s = synth_malicious_flows(rules, 5, pool, {}, 1);
  ASSERT_EQ(s.flows.size(), 5u);
  for (const FlowRecord& f : s.flows) EXPECT_EQ(f.src_host.to_string(), "192.0.2.7");
}

TEST(Synth, UnsatisfiableRulesAreReported) {
  const auto rules = parse_ruleset(
      "signature a {\n payload /x{300}/\n}\n"
      "signature b {\n ip-proto == icmp\n payload /y/\n}\n"
      "signature c {\n enable \"x\"\n}\n"
      "signature d {\n payload /ok/\n}\n");
  const SynthResult s = synth_malicious_flows(rules, 2, kPool, {}, 1);
  EXPECT_EQ(s.flows.size(), 2u);
  ASSERT_EQ(s.skipped.size(), 3u);
  EXPECT_EQ(s.skipped[0].id, "a");
  EXPECT_EQ(s.skipped[1].id, "b");
  EXPECT_EQ(s.skipped[2].id, "c");
}

TEST(Synth, PoolPreconditions) {
  const auto rules = parse_ruleset("signature r {\n payload /x/\n}\n");
  EXPECT_THROW(synth_malicious_flows(rules, 1, {}, {}, 1), InvalidConfig);
  EXPECT_THROW(synth_malicious_flows(rules, 1, {Ipv4::parse("10.0.0.1")}, {Ipv4::parse("10.0.0.1")}, 1),
               HostOverlapError);
}

TEST(Overlay, MaliciousOnly) {
  FlowRecord m = benign_flow("192.0.2.1", "10.0.0.9", 0);
  m.label = Label::kMalicious;
  m.origin = "r";
  const LabeledDataset ds = overlay({}, {m}, {}, 1);
  EXPECT_EQ(ds.flows.size(), 1u);
  EXPECT_EQ(ds.manifest.malicious_count, 1u);
  EXPECT_EQ(ds.manifest.benign_count, 0u);
  EXPECT_TRUE(check_invariants(ds).empty());
}

TEST(Overlay, OverlapIsRejectedWithAddresses) {
  FlowRecord m = benign_flow("10.0.0.1", "10.0.0.2", 0);
  m.label = Label::kMalicious;
  m.origin = "r";
  try {
    overlay({benign_flow("10.0.0.1", "10.0.0.2", 5)}, {m}, {Ipv4::parse("10.0.0.1")}, 1);
    FAIL();
  } catch (const HostOverlapError& e) {
    EXPECT_EQ(e.addresses(), std::vector<std::string>{"10.0.0.1"});
  }
}

TEST(Overlay, OrderedAndWithinBenignSpan) {
  std::vector<FlowRecord> benign;
  for (int i = 0; i < 100; ++i) benign.push_back(benign_flow("10.0.0.1", "10.0.0.2", 1000 + 37 * ((i * 13) % 100)));
  const auto rules = parse_ruleset("signature r {\n payload /evil[0-9]+/\n}\n");
  const BuildResult b = build_dataset(benign, rules, 10, kPool, 3);
  const LabeledDataset& ds = b.dataset;
  ASSERT_EQ(ds.flows.size(), 110u);
  EXPECT_TRUE(std::is_sorted(ds.flows.begin(), ds.flows.end(),
                             [](const auto& a, const auto& c) { return a.timestamp_us < c.timestamp_us; }));
  for (const FlowRecord& f : ds.flows) {
    EXPECT_GE(f.timestamp_us, 1000);
    EXPECT_LE(f.timestamp_us, 1000 + 37 * 99);
  }
  EXPECT_TRUE(check_invariants(ds).empty());
  EXPECT_TRUE(revalidate_payloads(ds).empty());
  EXPECT_EQ(ds.manifest.seeds.at("dataset"), 3u);
}

TEST(Overlay, DeterministicInSeed) {
  std::vector<FlowRecord> benign = {benign_flow("10.0.0.1", "10.0.0.2", 10), benign_flow("10.0.0.3", "10.0.0.2", 90)};
  const auto rules = parse_ruleset("signature r {\n payload /a+b/\n}\n");
  EXPECT_EQ(serialize_dataset(build_dataset(benign, rules, 4, kPool, 8).dataset),
            serialize_dataset(build_dataset(benign, rules, 4, kPool, 8).dataset));
  EXPECT_NE(serialize_dataset(build_dataset(benign, rules, 4, kPool, 8).dataset),
            serialize_dataset(build_dataset(benign, rules, 4, kPool, 9).dataset));
}

TEST(Invariants, DetectViolations) {
  LabeledDataset ds;
  ds.benign_hosts = {Ipv4::parse("10.0.0.1")};
  ds.malicious_host_pool = {Ipv4::parse("10.0.0.1")};
  FlowRecord f = benign_flow("10.0.0.5", "10.0.0.1", 0);
  f.label = Label::kMalicious;
  f.origin = "benign";
  ds.flows.push_back(f);
  EXPECT_EQ(check_invariants(ds).size(), 4u);
}

TEST(DatasetIo, RoundTrip) {
  std::vector<FlowRecord> benign = {benign_flow("10.0.0.1", "10.0.0.2", 10, std::string("\x00\xff\x2f", 3)),
                                    benign_flow("10.0.0.3", "10.0.0.2", 90, "")};
  const auto rules = parse_ruleset("signature r {\n ip-proto == udp\n payload /\\x00[\\x80-\\xff]+/\n}\n");
  const LabeledDataset ds = build_dataset(benign, rules, 5, kPool, 2).dataset;
  const auto path = std::filesystem::temp_directory_path() / "rnnids_dataset_test.jsonl";
  write_dataset(path, ds);
  const LabeledDataset back = read_dataset(path);
  EXPECT_EQ(back, ds);
  EXPECT_EQ(back.flows[0].payload, (Bytes{0x00, 0xFF, 0x2F}));
  std::filesystem::remove(path);
}

TEST(DatasetIo, EmptyDataset) {
  const LabeledDataset ds = overlay({}, {}, {}, 0);
  const std::string text = serialize_dataset(ds);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
  EXPECT_EQ(parse_dataset(text), ds);
}

TEST(DatasetIo, RandomPayloadsSurvive) {
  Rng rng(12);
  LabeledDataset ds;
  for (int i = 0; i < 200; ++i) {
    FlowRecord f = benign_flow("10.0.0.1", "10.0.0.2", i);
    f.payload.resize(rng.below(64));
    for (auto& b : f.payload) b = static_cast<std::uint8_t>(rng.below(256));
    ds.flows.push_back(f);
  }
  ds.manifest.benign_count = ds.flows.size();
  EXPECT_EQ(parse_dataset(serialize_dataset(ds)), ds);
}

TEST(DatasetIo, Errors) {
  const std::string good = serialize_dataset(overlay({benign_flow("10.0.0.1", "10.0.0.2", 1)}, {}, {}, 0));
  auto line_of = [](const std::string& text) {
    try {
      parse_dataset(text);
    } catch (const DatasetFormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  std::string wrong_version = good;
  wrong_version.replace(wrong_version.find("\"version\":1"), 11, "\"version\":9");
  EXPECT_EQ(line_of(wrong_version), 1u);
  EXPECT_EQ(line_of(good + "{not json}\n"), 3u);
  std::string bad_payload = good;
  bad_payload.replace(bad_payload.find("\"payload\":\""), 11, "\"payload\":\"!");
  EXPECT_EQ(line_of(bad_payload), 2u);
  EXPECT_EQ(line_of(""), 1u);
  std::string bad_port = good;
  bad_port.replace(bad_port.find("\"sport\":50000"), 13, "\"sport\":70000");
  EXPECT_EQ(line_of(bad_port), 2u);
}

}  // namespace
}  // namespace rnnids::dataset
