#include "rnnids/simmetrics/matrix.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "rnnids/error.hpp"

namespace rnnids::simmetrics {

namespace {

std::string one_decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string Metric::describe() const {
  if (kind == Kind::kLevenshtein) return "levenshtein";
  return "smith-waterman match=" + format_number(params.match) + " mismatch=" + format_number(params.mismatch) +
         " gap=" + format_number(params.gap_penalty);
}

double pairwise_pct(ByteView a, ByteView b, const Metric& metric) {
  if (metric.kind == Metric::Kind::kLevenshtein) return levenshtein_similarity_pct(a, b);
  return sw_normalized_similarity_pct(a, b, metric.params);
}

SimilarityMatrix similarity_matrix(std::vector<LabeledSequence> sequences, const Metric& metric) {
  if (sequences.size() < 2) {
    throw NotEnoughSequences("a similarity matrix needs at least 2 sequences, got " +
                             std::to_string(sequences.size()));
  }
  if (metric.kind == Metric::Kind::kSmithWaterman) metric.params.validate();
  std::stable_partition(sequences.begin(), sequences.end(), [](const auto& s) { return !s.generated; });

  SimilarityMatrix m;
  m.metric = metric;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    m.labels.push_back(sequences[i].label);
    std::vector<double> row;
    for (std::size_t j = 0; j < i; ++j) row.push_back(pairwise_pct(sequences[i].bytes, sequences[j].bytes, metric));
    row.push_back(100.0);
    m.values.push_back(std::move(row));
  }
  return m;
}

std::string SimilarityMatrix::to_csv() const {
  std::ostringstream os;
  os << "label";
  for (const auto& l : labels) os << ',' << csv_field(l);
  os << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    os << csv_field(labels[i]);
    for (std::size_t j = 0; j < size(); ++j) {
      os << ',';
      if (j <= i) os << one_decimal(values[i][j]);
    }
    os << '\n';
  }
  return os.str();
}

std::string SimilarityMatrix::to_table() const {
  std::size_t width = 5;
  for (const auto& l : labels) width = std::max(width, l.size());
  auto pad = [width](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };

  std::ostringstream os;
  os << "# " << metric.describe() << '\n';
  for (std::size_t i = 0; i < size(); ++i) {
    os << pad(labels[i]);
    for (std::size_t j = 0; j <= i; ++j) os << ' ' << pad(one_decimal(values[i][j]));
    os << '\n';
  }
  os << std::string(width, ' ');
  for (const auto& l : labels) os << ' ' << pad(l);
  os << '\n';
  return os.str();
}

}  // namespace rnnids::simmetrics
