#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "rnnids/bytes.hpp"
#include "rnnids/dataset/dataset_io.hpp"
#include "rnnids/dataset/overlay.hpp"
#include "rnnids/dataset/pcap.hpp"
#include "rnnids/detector/experiments.hpp"
#include "rnnids/error.hpp"
#include "rnnids/payloads/encoder.hpp"
#include "rnnids/payloads/spectral.hpp"
#include "rnnids/seqmodel/model_io.hpp"
#include "rnnids/seqmodel/train.hpp"
#include "rnnids/rng.hpp"
#include "rnnids/signatures/dfa.hpp"
#include "rnnids/signatures/regex_parser.hpp"
#include "rnnids/signatures/repair.hpp"
#include "rnnids/signatures/rule.hpp"
#include "rnnids/simmetrics/alignment.hpp"
#include "rnnids/simmetrics/matrix.hpp"

namespace rnnids::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Raised for bad flag values that CLI11 cannot validate on its own.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& message) : Error("UsageError", message) {}
};

std::string read_text(const fs::path& p) { return rnnids::to_string(read_file(p)); }

std::vector<signatures::SignatureRule> read_rules(const fs::path& p) { return signatures::parse_ruleset(read_text(p)); }

// Everything needed to rerun an invocation. The argument vector is stored
// with every seed made explicit, so replay never consults the environment.
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> args;
  std::map<std::string, std::string> inputs;
  std::map<std::string, std::string> outputs;
  std::map<std::string, std::uint64_t> seeds;
  std::map<std::string, std::string> config;

  json to_json() const {
    json j;
    j["tool"] = "rnnids";
    j["version"] = RNNIDS_VERSION;
    j["subcommand"] = subcommand;
    j["args"] = args;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["seeds"] = seeds;
    j["config"] = config;
    return j;
  }

  // Written as <output>.run.json, or <dir>/run.json for directory outputs.
  void write_next_to(const fs::path& out) const {
    const fs::path target = fs::is_directory(out) ? out / "run.json" : fs::path(out.string() + ".run.json");
    write_file(target, to_json().dump(2) + "\n");
  }
};

// Seed flag handling: --seed wins, then RNNIDS_SEED, then 0.
struct SeedOption {
  std::optional<std::uint64_t> flag;

  void attach(CLI::App* app) { app->add_option("--seed", flag, "RNG seed (default: $RNNIDS_SEED or 0)"); }

  std::uint64_t resolve() const {
    if (flag) return *flag;
    if (const char* env = std::getenv("RNNIDS_SEED"); env && *env) {
      try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used == std::string_view(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string("RNNIDS_SEED is not an unsigned integer: ") + env);
    }
    return 0;
  }
};

// Training flags; unset ones fall back to the config file, then defaults.
struct TrainOptions {
  std::string config_file;
  std::optional<std::size_t> batch_size, epochs, layers, embedding, seq_len, hidden, hidden_cap;
  std::optional<double> learning_rate, grad_clip, temperature;
  std::optional<std::string> optimizer;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "key=value file using the training table's field names")
        ->check(CLI::ExistingFile);
    app->add_option("--batch-size", batch_size);
    app->add_option("--learning-rate", learning_rate);
    app->add_option("--epochs", epochs);
    app->add_option("--layers", layers, "number of hidden layers");
    app->add_option("--embedding-size", embedding, "word vector size");
    app->add_option("--sequence-length", seq_len);
    app->add_option("--hidden-size", hidden, "0 derives it from the corpus length");
    app->add_option("--hidden-cap", hidden_cap);
    app->add_option("--grad-clip", grad_clip);
    app->add_option("--temperature", temperature);
    app->add_option("--optimizer", optimizer)->check(CLI::IsMember({"sgd", "adam"}));
  }

  static seqmodel::Optimizer parse_optimizer(const std::string& v) {
    if (v == "sgd") return seqmodel::Optimizer::kSgd;
    if (v == "adam") return seqmodel::Optimizer::kAdam;
    throw UsageError("optimizer must be sgd or adam, got '" + v + "'");
  }

  // Applies config-file entries, then flags. Records every override.
  seqmodel::LstmConfig resolve(std::uint64_t seed, std::map<std::string, std::string>& record) const {
    seqmodel::LstmConfig c;
    if (!config_file.empty()) {
      std::istringstream in(read_text(config_file));
      std::string line;
      std::size_t n = 0;
      while (std::getline(in, line)) {
        ++n;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
          const auto b = s.find_first_not_of(" \t\r");
          const auto e = s.find_last_not_of(" \t\r");
          return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw UsageError(config_file + ":" + std::to_string(n) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        std::replace(key.begin(), key.end(), '-', '_');
        std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
        try {
          if (key == "batch_size") c.batch_size = std::stoull(value);
          else if (key == "learning_rate") c.learning_rate = std::stod(value);
          else if (key == "epochs" || key == "number_of_epochs") c.epochs = std::stoull(value);
          else if (key == "num_hidden_layers" || key == "hidden_layers") c.num_hidden_layers = std::stoull(value);
          else if (key == "embedding_size" || key == "word_vector_size") c.embedding_size = std::stoull(value);
          else if (key == "sequence_length") c.sequence_length = std::stoull(value);
          else if (key == "hidden_size") c.hidden_size = std::stoull(value);
          else if (key == "hidden_cap") c.hidden_cap = std::stoull(value);
          else if (key == "grad_clip") c.grad_clip = std::stod(value);
          else if (key == "temperature") c.temperature = std::stod(value);
          else if (key == "optimizer") c.optimizer = parse_optimizer(value);
          else throw UsageError(config_file + ":" + std::to_string(n) + ": unknown key '" + key + "'");
        } catch (const std::logic_error&) {
          throw UsageError(config_file + ":" + std::to_string(n) + ": bad value for " + key);
        }
        record[key] = value;
      }
    }
    auto flag = [&](const auto& opt, auto& field, const char* name) {
      if (opt) {
        field = *opt;
        std::ostringstream s;
        s << *opt;
        record[name] = s.str();
      }
    };
    flag(batch_size, c.batch_size, "batch_size");
    flag(learning_rate, c.learning_rate, "learning_rate");
    flag(epochs, c.epochs, "epochs");
    flag(layers, c.num_hidden_layers, "num_hidden_layers");
    flag(embedding, c.embedding_size, "embedding_size");
    flag(seq_len, c.sequence_length, "sequence_length");
    flag(hidden, c.hidden_size, "hidden_size");
    flag(hidden_cap, c.hidden_cap, "hidden_cap");
    flag(grad_clip, c.grad_clip, "grad_clip");
    flag(temperature, c.temperature, "temperature");
    if (optimizer) {
      c.optimizer = parse_optimizer(*optimizer);
      record["optimizer"] = *optimizer;
    }
    c.rng_seed = seed;
    c.validate();
    return c;
  }
};

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

json report_json(const detector::EvalReport& r) { return json::parse(r.to_json()); }

json paired_json(const detector::PairedReport& p) { return json::parse(p.to_json()); }

// Replaces args[i+1] after `flag`, or appends the pair.
std::vector<std::string> with_flag(std::vector<std::string> args, const std::string& flag, const std::string& value) {
  for (std::size_t i = 0; i + 1 < args.size(); ++i) {
    if (args[i] == flag) {
      args[i + 1] = value;
      return args;
    }
    if (args[i].rfind(flag + "=", 0) == 0) {
      args[i] = flag + "=" + value;
      return args;
    }
  }
  args.push_back(flag);
  args.push_back(value);
  return args;
}

// ---- siggen helpers ------------------------------------------------------

struct Candidate {
  std::string pattern;
  std::size_t like = 0;
};

std::size_t closest_rule(const std::string& pattern, const std::vector<std::string>& sources) {
  std::size_t best = 0;
  double best_pct = -1.0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const double pct = simmetrics::levenshtein_similarity_pct(to_bytes(pattern), to_bytes(sources[i]));
    if (pct > best_pct) {
      best_pct = pct;
      best = i;
    }
  }
  return best;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Synthetic signature generation and evaluation for signature-based intrusion detection"};
  app.set_version_flag("--version", std::string(RNNIDS_VERSION));
  app.require_subcommand(1);

  RunManifest manifest;
  std::function<int()> action;
  std::optional<fs::path> manifest_anchor;
  auto set_action = [&](CLI::App* sub, std::function<int()> fn) {
    sub->callback([&, sub, fn] {
      manifest.subcommand = sub->get_name();
      action = fn;
    });
  };

  // corpus
  auto* corpus = app.add_subcommand("corpus", "Write toy-encoded variants of a base payload");
  std::string base_file, key_hex = "3ca55a17", corpus_out;
  std::size_t iterations = 100;
  SeedOption corpus_seed;
  corpus->add_option("--base", base_file, "base payload file")->required()->check(CLI::ExistingFile);
  corpus->add_option("--key", key_hex, "XOR key as hex")->capture_default_str();
  corpus->add_option("--iterations", iterations, "highest number of encoding rounds")->capture_default_str();
  corpus->add_option("--out", corpus_out, "output directory")->required();
  corpus_seed.attach(corpus);
  set_action(corpus, [&] {
    const auto seed = corpus_seed.resolve();
    const auto c = payloads::build_corpus(read_file(base_file), from_hex(key_hex), iterations, seed);
    payloads::write_corpus(corpus_out, c);
    manifest.inputs["base"] = base_file;
    manifest.outputs["corpus"] = corpus_out;
    manifest.seeds["corpus"] = seed;
    manifest.args = with_flag(args, "--seed", std::to_string(seed));
    manifest_anchor = corpus_out;
    print_json({{"variants", c.variants.size()}, {"out", corpus_out}});
    return 0;
  });

  // spectra
  auto* spectra = app.add_subcommand("spectra", "Render a corpus as a greyscale PGM image");
  std::string spectra_in, spectra_out;
  spectra->add_option("--corpus", spectra_in, "corpus directory")->required()->check(CLI::ExistingDirectory);
  spectra->add_option("--out", spectra_out, "PGM file")->required();
  set_action(spectra, [&] {
    const auto m = payloads::build_spectral(payloads::read_corpus(spectra_in));
    write_file(spectra_out, payloads::render_pgm(m));
    manifest.inputs["corpus"] = spectra_in;
    manifest.outputs["image"] = spectra_out;
    manifest.args = args;
    manifest_anchor = spectra_out;
    print_json({{"rows", m.rows},
                {"cols", m.cols},
                {"constant_columns_encoded_rows", payloads::constant_columns(m, 1).size()},
                {"constant_columns_all_rows", payloads::constant_columns(m, 0).size()}});
    return 0;
  });

  // train
  auto* train_cmd = app.add_subcommand("train", "Train a character-level LSTM on a file");
  std::string train_in, train_out;
  bool verbose = false;
  TrainOptions train_opts;
  SeedOption train_seed;
  train_cmd->add_option("--corpus", train_in, "training file")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--out", train_out, "model file")->required();
  train_cmd->add_flag("--verbose", verbose, "print every epoch's loss to stderr");
  train_opts.attach(train_cmd);
  train_seed.attach(train_cmd);
  set_action(train_cmd, [&] {
    const auto seed = train_seed.resolve();
    const auto cfg = train_opts.resolve(seed, manifest.config);
    const auto corpus_tokens = seqmodel::encode_corpus(read_file(train_in), train_in);
    const auto model = seqmodel::train(corpus_tokens, cfg, [&](std::size_t e, double loss) {
      if (verbose) std::fprintf(stderr, "epoch %zu loss %.6f\n", e + 1, loss);
    });
    seqmodel::save_model(model, train_out);
    manifest.inputs["corpus"] = train_in;
    manifest.outputs["model"] = train_out;
    manifest.seeds["train"] = seed;
    manifest.args = with_flag(args, "--seed", std::to_string(seed));
    manifest_anchor = train_out;
    print_json({{"epochs", model.loss_trace.size()},
                {"final_loss", model.loss_trace.back()},
                {"hidden_size", model.hidden_size()},
                {"vocab_size", model.vocab_size()}});
    return 0;
  });

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Draw octets from a trained model");
  std::string model_file, prime, prime_file, sample_out;
  std::size_t sample_len = 100;
  std::optional<double> sample_temp;
  SeedOption sample_seed;
  sample_cmd->add_option("--model", model_file)->required()->check(CLI::ExistingFile);
  auto* prime_opt = sample_cmd->add_option("--prime", prime, "priming text");
  sample_cmd->add_option("--prime-file", prime_file, "priming octets from a file")
      ->check(CLI::ExistingFile)
      ->excludes(prime_opt);
  sample_cmd->add_option("--length", sample_len, "octets to draw")->capture_default_str();
  sample_cmd->add_option("--temperature", sample_temp, "default: the model's configured temperature");
  sample_cmd->add_option("--out", sample_out, "output file (default stdout)");
  sample_seed.attach(sample_cmd);
  set_action(sample_cmd, [&] {
    const auto seed = sample_seed.resolve();
    const auto model = seqmodel::load_model(model_file);
    Bytes primer = prime_file.empty() ? to_bytes(prime) : read_file(prime_file);
    if (primer.empty()) primer.push_back(model.vocab.octet(0));
    const Bytes out =
        seqmodel::sample(model, primer, sample_len, sample_temp.value_or(model.config.temperature), seed);
    manifest.inputs["model"] = model_file;
    manifest.seeds["sample"] = seed;
    manifest.args = with_flag(args, "--seed", std::to_string(seed));
    if (sample_out.empty()) {
      std::cout.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    } else {
      write_file(sample_out, out);
      manifest.outputs["sample"] = sample_out;
      manifest_anchor = sample_out;
    }
    return 0;
  });

  // compare
  auto* compare = app.add_subcommand("compare", "Similarity matrix over files, as CSV");
  std::string metric = "sw", compare_format = "csv";
  double match = 1.0, mismatch = -1.0, gap = -1.0;
  std::vector<std::string> originals, generated;
  compare->add_option("--metric", metric, "lev or sw")->capture_default_str()->check(CLI::IsMember({"lev", "sw"}));
  compare->add_option("--match", match, "")->capture_default_str();
  compare->add_option("--mismatch", mismatch, "")->capture_default_str();
  compare->add_option("--gap", gap, "gap penalty")->capture_default_str();
  compare->add_option("--format", compare_format, "csv or table")->capture_default_str()->check(CLI::IsMember({"csv", "table"}));
  compare->add_option("--generated", generated, "generated sequences, listed after the originals")
      ->check(CLI::ExistingFile);
  compare->add_option("files", originals, "original sequences")->check(CLI::ExistingFile);
  set_action(compare, [&] {
    std::vector<simmetrics::LabeledSequence> seqs;
    for (const auto& f : originals) seqs.push_back({fs::path(f).filename().string(), read_file(f), false});
    for (const auto& f : generated) seqs.push_back({fs::path(f).filename().string(), read_file(f), true});
    const auto m = metric == "lev" ? simmetrics::Metric::levenshtein()
                                   : simmetrics::Metric::smith_waterman({match, mismatch, gap});
    const auto matrix = simmetrics::similarity_matrix(std::move(seqs), m);
    std::cout << (compare_format == "csv" ? matrix.to_csv() : matrix.to_table());
    return 0;
  });

  // siggen
  auto* siggen = app.add_subcommand("siggen", "Train on a ruleset's patterns and emit synthetic rules");
  std::string sig_rules, sig_out, sig_model_out;
  std::size_t sig_count = 10, sig_rounds = 20;
  TrainOptions sig_opts;
  SeedOption sig_seed;
  siggen->add_option("--rules", sig_rules, "source ruleset")->required()->check(CLI::ExistingFile);
  siggen->add_option("--out", sig_out, "synthetic ruleset")->required();
  siggen->add_option("--count", sig_count, "rules to emit at most")->capture_default_str();
  siggen->add_option("--rounds", sig_rounds, "sampling rounds at most")->capture_default_str();
  siggen->add_option("--model-out", sig_model_out, "also save the trained model");
  sig_opts.attach(siggen);
  sig_seed.attach(siggen);
  set_action(siggen, [&] {
    const auto seed = sig_seed.resolve();
    const auto rules = read_rules(sig_rules);
    std::vector<std::string> sources;
    std::vector<const signatures::SignatureRule*> owners;
    std::set<std::string> known;
    std::string text;
    for (const auto& r : rules) {
      if (!r.payload_regex) continue;
      sources.push_back(r.payload_source);
      owners.push_back(&r);
      known.insert(r.payload_source);
      known.insert(signatures::to_pattern(*r.payload_regex));
      text += r.payload_source + "\n";
    }
    if (sources.empty()) throw UsageError("ruleset has no payload patterns to learn from");
    std::set<std::string> ids;
    for (const auto& r : rules) ids.insert(r.id);

    const auto cfg = sig_opts.resolve(mix_seed(seed, 0), manifest.config);
    const auto corpus_tokens = seqmodel::encode_corpus(to_bytes(text), sig_rules);
    const auto model = seqmodel::train(corpus_tokens, cfg);
    if (!sig_model_out.empty()) seqmodel::save_model(model, sig_model_out);

    std::vector<signatures::SignatureRule> out;
    std::size_t drawn = 0, unrepairable = 0, rejected = 0;
    for (std::size_t round = 0; round < sig_rounds && out.size() < sig_count; ++round) {
      const Bytes primer{static_cast<std::uint8_t>('\n')};
      const Bytes raw = seqmodel::sample(model, primer, text.size(), cfg.temperature, mix_seed(seed, round + 1));
      std::istringstream lines(rnnids::to_string(raw));
      std::string line;
      while (std::getline(lines, line) && out.size() < sig_count) {
        if (line.empty()) continue;
        ++drawn;
        std::string repaired;
        try {
          repaired = signatures::repair_generated(line);
        } catch (const UnrepairableOutput&) {
          ++unrepairable;
          continue;
        }
        if (repaired.empty() || known.count(repaired)) {
          ++rejected;
          continue;
        }
        try {
          const auto ast = signatures::parse_regex(repaired);
          const auto printed = signatures::to_pattern(ast);
          // Languages that match nothing, or only what an original already
          // spells out, add no detection value.
          if (known.count(printed) || signatures::compile(ast).start() == signatures::Dfa::kDead) {
            ++rejected;
            continue;
          }
          std::string id;
          for (std::size_t k = out.size() + 1;; ++k) {
            id = "rnn_" + std::to_string(k);
            if (!ids.count(id)) break;
          }
          const auto& like = *owners[closest_rule(repaired, sources)];
          out.push_back(signatures::make_rule(id, repaired, like));
          ids.insert(id);
          known.insert(repaired);
          known.insert(printed);
        } catch (const Error&) {
          ++rejected;
        }
      }
    }
    write_file(sig_out, signatures::format_ruleset(out));
    manifest.inputs["rules"] = sig_rules;
    manifest.outputs["rules"] = sig_out;
    if (!sig_model_out.empty()) manifest.outputs["model"] = sig_model_out;
    manifest.seeds["siggen"] = seed;
    manifest.args = with_flag(args, "--seed", std::to_string(seed));
    manifest_anchor = sig_out;
    print_json(json{{"final_loss", model.loss_trace.back()},
                {"candidates", drawn},
                {"unrepairable", unrepairable},
                {"rejected", rejected},
                {"emitted", out.size()}});
    return 0;
  });

  // dataset
  auto* dataset_cmd = app.add_subcommand("dataset", "Ingest benign traffic, synthesise attacks and overlay them");
  std::string ds_pcap, ds_rules, ds_pool = dataset::kDefaultMaliciousPool.to_string(), ds_out;
  std::size_t per_rule = 10, max_payload = signatures::kDefaultMaxGeneratedLength;
  SeedOption ds_seed;
  dataset_cmd->add_option("--pcap", ds_pcap, "benign capture")->check(CLI::ExistingFile);
  dataset_cmd->add_option("--rules", ds_rules, "generation ruleset")->check(CLI::ExistingFile);
  dataset_cmd->add_option("--per-rule", per_rule, "malicious flows per rule")->capture_default_str();
  dataset_cmd->add_option("--pool", ds_pool, "malicious source network")->capture_default_str();
  dataset_cmd->add_option("--max-payload", max_payload, "longest synthesised payload")->capture_default_str();
  dataset_cmd->add_option("--out", ds_out, "dataset file (JSON lines)")->required();
  ds_seed.attach(dataset_cmd);
  set_action(dataset_cmd, [&] {
    const auto seed = ds_seed.resolve();
    std::vector<dataset::FlowRecord> benign;
    std::size_t skipped_packets = 0;
    if (!ds_pcap.empty()) {
      auto ingest = dataset::ingest_pcap(read_file(ds_pcap));
      if (ingest.warnings > 0) std::fprintf(stderr, "warning: %zu truncated record(s) ignored\n", ingest.warnings);
      skipped_packets = ingest.skipped;
      benign = std::move(ingest.flows);
      manifest.inputs["pcap"] = ds_pcap;
    }
    std::vector<signatures::SignatureRule> rules;
    if (!ds_rules.empty()) {
      rules = read_rules(ds_rules);
      manifest.inputs["rules"] = ds_rules;
    }
    Ipv4Net pool;
    try {
      pool = Ipv4Net::parse(ds_pool);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto built =
        dataset::build_dataset(std::move(benign), rules, per_rule, dataset::expand_pool(pool), seed, {max_payload});
    dataset::write_dataset(ds_out, built.dataset);
    json skipped = json::array();
    for (const auto& s : built.skipped) skipped.push_back({{"rule", s.id}, {"reason", s.reason}});
    manifest.outputs["dataset"] = ds_out;
    manifest.seeds["dataset"] = seed;
    manifest.args = with_flag(args, "--seed", std::to_string(seed));
    manifest_anchor = ds_out;
    print_json({{"benign", built.dataset.manifest.benign_count},
                {"malicious", built.dataset.manifest.malicious_count},
                {"skipped_packets", skipped_packets},
                {"skipped_rules", skipped}});
    return 0;
  });

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "Scan a dataset with a ruleset and report FP/FN");
  std::string scan_ds, scan_rules, scan_synth, scan_alarms;
  scan_cmd->add_option("--dataset", scan_ds)->required()->check(CLI::ExistingFile);
  scan_cmd->add_option("--rules", scan_rules)->required()->check(CLI::ExistingFile);
  scan_cmd->add_option("--synthetic", scan_synth, "extra rules tagged synthetic")->check(CLI::ExistingFile);
  scan_cmd->add_option("--alarms", scan_alarms, "write alarms as JSON lines");
  set_action(scan_cmd, [&] {
    const auto ds = dataset::read_dataset(scan_ds);
    detector::Ruleset rs(read_rules(scan_rules), detector::Provenance::kOriginal);
    if (!scan_synth.empty()) {
      for (auto& r : read_rules(scan_synth)) rs.add(std::move(r), detector::Provenance::kSynthetic);
    }
    const auto alarms = detector::scan(ds, rs);
    if (!scan_alarms.empty()) {
      std::string lines;
      for (const auto& a : alarms) lines += json({{"flow", a.flow_index}, {"rule", a.rule_id}}).dump() + "\n";
      write_file(scan_alarms, lines);
      manifest.outputs["alarms"] = scan_alarms;
      manifest_anchor = scan_alarms;
    }
    manifest.args = args;
    print_json(report_json(detector::evaluate(ds, alarms)));
    return 0;
  });

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Paired baseline vs augmented evaluations");
  experiment->require_subcommand(1);
  auto* worm = experiment->add_subcommand("worm", "Worm mutants against a baseline rule plus one synthetic rule");
  std::string worm_base, worm_synth, worm_pcap, worm_pool, worm_out;
  std::vector<std::string> mutant_files;
  std::uint16_t worm_port = 80;
  SeedOption worm_seed;
  worm->add_option("--baseline", worm_base, "baseline ruleset")->required()->check(CLI::ExistingFile);
  worm->add_option("--synthetic", worm_synth, "ruleset whose first rule is the synthetic one")
      ->required()
      ->check(CLI::ExistingFile);
  worm->add_option("--mutant", mutant_files, "mutant payload files")->check(CLI::ExistingFile);
  worm->add_option("--pcap", worm_pcap, "benign capture")->check(CLI::ExistingFile);
  worm->add_option("--pool", worm_pool, "malicious source network");
  worm->add_option("--dst-port", worm_port, "")->capture_default_str();
  worm->add_option("--out", worm_out, "directory for dataset.jsonl and report.json");
  worm_seed.attach(worm);
  worm->callback([&] {
    manifest.subcommand = "experiment worm";
    action = [&] {
      const auto seed = worm_seed.resolve();
      const detector::Ruleset baseline(read_rules(worm_base), detector::Provenance::kOriginal);
      const auto synth_rules = read_rules(worm_synth);
      if (synth_rules.empty()) throw UsageError(worm_synth + " holds no rules");
      detector::WormScenario sc;
      for (const auto& f : mutant_files) sc.mutants.push_back(read_file(f));
      if (!worm_pcap.empty()) sc.benign = dataset::ingest_pcap(read_file(worm_pcap)).flows;
      if (!worm_pool.empty()) sc.pool = dataset::expand_pool(Ipv4Net::parse(worm_pool));
      sc.dst_port = worm_port;
      sc.seed = seed;
      const auto result = detector::experiment_worm(baseline, synth_rules.front(), sc);
      std::cout << result.report.to_table();
      manifest.seeds["worm"] = seed;
      manifest.args = with_flag(args, "--seed", std::to_string(seed));
      if (!worm_out.empty()) {
        fs::create_directories(worm_out);
        dataset::write_dataset(fs::path(worm_out) / "dataset.jsonl", result.dataset);
        write_file(fs::path(worm_out) / "report.json", paired_json(result.report).dump(2) + "\n");
        manifest.outputs["dir"] = worm_out;
        manifest_anchor = worm_out;
      }
      return 0;
    };
  });
  auto* general = experiment->add_subcommand("general", "A ruleset with and without added synthetic rules");
  std::string gen_rules, gen_synth, gen_ds, gen_out;
  general->add_option("--rules", gen_rules, "detector ruleset")->required()->check(CLI::ExistingFile);
  general->add_option("--synthetic", gen_synth, "synthetic rules to add")->required()->check(CLI::ExistingFile);
  general->add_option("--dataset", gen_ds)->required()->check(CLI::ExistingFile);
  general->add_option("--out", gen_out, "report.json path");
  general->callback([&] {
    manifest.subcommand = "experiment general";
    action = [&] {
      const auto ds = dataset::read_dataset(gen_ds);
      const detector::Ruleset rs(read_rules(gen_rules), detector::Provenance::kOriginal);
      const auto report = detector::experiment_general(rs, read_rules(gen_synth), ds);
      std::cout << report.to_table();
      manifest.args = args;
      if (!gen_out.empty()) {
        write_file(gen_out, paired_json(report).dump(2) + "\n");
        manifest.outputs["report"] = gen_out;
        manifest_anchor = gen_out;
      }
      return 0;
    };
  });

  // replay
  auto* replay = app.add_subcommand("replay", "Rerun the invocation recorded in a run manifest");
  std::string replay_file;
  replay->add_option("manifest", replay_file)->required()->check(CLI::ExistingFile);
  replay->callback([&] {
    action = [&] {
      const auto j = json::parse(read_text(replay_file));
      const auto recorded = j.at("args").get<std::vector<std::string>>();
      if (!recorded.empty() && recorded.front() == "replay") throw UsageError("a manifest cannot replay a replay");
      return cli_dispatch(recorded);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const int code = action ? action() : 2;
    if (code == 0 && manifest_anchor) manifest.write_next_to(*manifest_anchor);
    return code;
  } catch (const UsageError& e) {
    std::cerr << json({{"error", e.name()}, {"message", e.what()}}).dump() << "\n";
    std::cerr << app.help();
    return 2;
  } catch (const Error& e) {
    std::cerr << json({{"error", e.name()}, {"message", e.what()}}).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json({{"error", "Error"}, {"message", e.what()}}).dump() << "\n";
    return 1;
  }
}

}  // namespace rnnids::cli
