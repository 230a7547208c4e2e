#include "rnnids/dataset/dataset_io.hpp"

#include <nlohmann/json.hpp>

#include "rnnids/error.hpp"

namespace rnnids::dataset {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "rnnids-dataset";

json hosts_json(const std::set<Ipv4>& hosts) {
  json a = json::array();
  for (const Ipv4& h : hosts) a.push_back(h.to_string());
  return a;
}

std::set<Ipv4> hosts_from(const json& a) {
  std::set<Ipv4> out;
  for (const json& h : a) out.insert(Ipv4::parse(h.get<std::string>()));
  return out;
}

json flow_json(const FlowRecord& f) {
  return {{"ts", f.timestamp_us},
          {"proto", std::string(to_string(f.proto))},
          {"src", f.src_host.to_string()},
          {"sport", f.src_port},
          {"dst", f.dst_host.to_string()},
          {"dport", f.dst_port},
          {"label", std::string(to_string(f.label))},
          {"origin", f.origin},
          {"payload", base64_encode(f.payload)}};
}

FlowRecord flow_from(const json& j) {
  FlowRecord f;
  f.timestamp_us = j.at("ts").get<std::int64_t>();
  f.proto = parse_proto(j.at("proto").get<std::string>());
  f.src_host = Ipv4::parse(j.at("src").get<std::string>());
  f.src_port = j.at("sport").get<std::uint16_t>();
  f.dst_host = Ipv4::parse(j.at("dst").get<std::string>());
  f.dst_port = j.at("dport").get<std::uint16_t>();
  f.label = parse_label(j.at("label").get<std::string>());
  f.origin = j.at("origin").get<std::string>();
  f.payload = base64_decode(j.at("payload").get<std::string>());
  return f;
}

void check_port(const json& j, const char* key) {
  const auto v = j.at(key).get<std::int64_t>();
  if (v < 0 || v > 65535) throw std::out_of_range(std::string(key) + " out of range");
}

}  // namespace

std::string serialize_dataset(const LabeledDataset& ds) {
  json rules = json::array();
  for (const GenerationRule& r : ds.manifest.generation_rules) rules.push_back({{"id", r.id}, {"pattern", r.pattern}});
  const json header = {
      {"format", kFormat},
      {"version", ds.manifest.version},
      {"manifest",
       {{"benign_count", ds.manifest.benign_count},
        {"malicious_count", ds.manifest.malicious_count},
        {"seeds", ds.manifest.seeds},
        {"generation_rules", rules}}},
      {"benign_hosts", hosts_json(ds.benign_hosts)},
      {"malicious_host_pool", hosts_json(ds.malicious_host_pool)},
  };
  std::string out = header.dump() + "\n";
  for (const FlowRecord& f : ds.flows) out += flow_json(f).dump() + "\n";
  return out;
}

LabeledDataset parse_dataset(std::string_view text) {
  LabeledDataset ds;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  bool have_header = false;
  while (pos < text.size()) {
    const auto nl = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      if (!have_header) {
        if (j.at("format").get<std::string>() != kFormat) throw DatasetFormatError(lineno, "not an rnnids dataset");
        const int version = j.at("version").get<int>();
        if (version != DatasetManifest::kVersion) {
          throw DatasetFormatError(lineno, "unsupported dataset version " + std::to_string(version));
        }
        const json& m = j.at("manifest");
        ds.manifest.version = version;
        ds.manifest.benign_count = m.at("benign_count").get<std::size_t>();
        ds.manifest.malicious_count = m.at("malicious_count").get<std::size_t>();
        ds.manifest.seeds = m.at("seeds").get<std::map<std::string, std::uint64_t>>();
        for (const json& r : m.at("generation_rules")) {
          ds.manifest.generation_rules.push_back({r.at("id").get<std::string>(), r.at("pattern").get<std::string>()});
        }
        ds.benign_hosts = hosts_from(j.at("benign_hosts"));
        ds.malicious_host_pool = hosts_from(j.at("malicious_host_pool"));
        have_header = true;
      } else {
        check_port(j, "sport");
        check_port(j, "dport");
        ds.flows.push_back(flow_from(j));
      }
    } catch (const DatasetFormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw DatasetFormatError(lineno, e.what());
    }
  }
  if (!have_header) throw DatasetFormatError(1, "missing manifest line");
  return ds;
}

void write_dataset(const std::filesystem::path& path, const LabeledDataset& ds) {
  write_file(path, serialize_dataset(ds));
}

LabeledDataset read_dataset(const std::filesystem::path& path) {
  const Bytes raw = read_file(path);
  return parse_dataset(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
}

}  // namespace rnnids::dataset
