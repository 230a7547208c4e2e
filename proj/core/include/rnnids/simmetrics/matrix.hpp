#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rnnids/bytes.hpp"
#include "rnnids/simmetrics/alignment.hpp"

namespace rnnids::simmetrics {

struct LabeledSequence {
  std::string label;
  Bytes bytes;
  bool generated = false;  // generated sequences are listed after originals
};

struct Metric {
  enum class Kind { kLevenshtein, kSmithWaterman } kind = Kind::kSmithWaterman;
  AlignmentParams params;

  static Metric levenshtein() { return {Kind::kLevenshtein, {}}; }
  static Metric smith_waterman(AlignmentParams p) { return {Kind::kSmithWaterman, p}; }
  std::string describe() const;
};

// Lower-triangular percentage matrix; row i holds columns 0..i.
struct SimilarityMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> values;
  Metric metric;

  std::size_t size() const { return labels.size(); }
  double at(std::size_t i, std::size_t j) const { return i >= j ? values[i][j] : values[j][i]; }

  // Header row and column of labels, one-decimal percentages, upper
  // triangle left empty.
  std::string to_csv() const;
  // Lower-triangle table with the labels repeated along the bottom.
  std::string to_table() const;
};

double pairwise_pct(ByteView a, ByteView b, const Metric& metric);

// Originals first, generated ones after, each group in input order.
// Throws NotEnoughSequences for fewer than two inputs.
SimilarityMatrix similarity_matrix(std::vector<LabeledSequence> sequences, const Metric& metric);

}  // namespace rnnids::simmetrics
