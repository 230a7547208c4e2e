#pragma once

#include <cstddef>

#include "rnnids/bytes.hpp"

namespace rnnids::simmetrics {

std::size_t levenshtein_distance(ByteView a, ByteView b);

// 100 * (1 - d(a, b) / max(|a|, |b|)). Two empty sequences are identical by
// convention and score 100.
double levenshtein_similarity_pct(ByteView a, ByteView b);

// Linear-gap scoring. Requires match > 0, mismatch <= 0, gap_penalty <= 0.
struct AlignmentParams {
  double match = 1.0;
  double mismatch = -1.0;
  double gap_penalty = -1.0;

  // Throws InvalidParams.
  void validate() const;
};

struct CellPos {
  std::size_t row = 0;  // 1-based position in `a`; 0 is the border row
  std::size_t col = 0;  // 1-based position in `b`
  bool operator==(const CellPos&) const = default;
};

struct AlignmentResult {
  double max_score = 0.0;
  CellPos max_pos;
  // Steps on the traceback path from max_pos back to the first zero cell.
  std::size_t align_len = 0;
  double normalized_similarity_pct = 0.0;
};

// Local alignment with scores floored at zero. The maximum is the first in
// row-major order; traceback prefers diagonal, then up (gap in b), then left.
// Throws EmptyInput.
AlignmentResult smith_waterman(ByteView a, ByteView b, const AlignmentParams& params = {});

// 100 * max_score / (match * align_len), clamped to [0, 100]; 0 if no
// positive-scoring cell exists.
double sw_normalized_similarity_pct(ByteView a, ByteView b, const AlignmentParams& params = {});

}  // namespace rnnids::simmetrics
