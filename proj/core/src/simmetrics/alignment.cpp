#include "rnnids/simmetrics/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rnnids/error.hpp"

namespace rnnids::simmetrics {

std::size_t levenshtein_distance(ByteView a, ByteView b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t subst = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({subst, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double levenshtein_similarity_pct(ByteView a, ByteView b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 100.0;
  const double d = static_cast<double>(levenshtein_distance(a, b));
  return 100.0 * (1.0 - d / static_cast<double>(longest));
}

void AlignmentParams::validate() const {
  if (!(match > 0.0) || !std::isfinite(match)) throw InvalidParams("match score must be positive");
  if (!(mismatch <= 0.0) || !std::isfinite(mismatch)) throw InvalidParams("mismatch score must be <= 0");
  if (!(gap_penalty <= 0.0) || !std::isfinite(gap_penalty)) throw InvalidParams("gap penalty must be <= 0");
}

AlignmentResult smith_waterman(ByteView a, ByteView b, const AlignmentParams& params) {
  params.validate();
  if (a.empty() || b.empty()) throw EmptyInput("Smith-Waterman needs two non-empty sequences");
  const std::size_t rows = a.size() + 1;
  const std::size_t cols = b.size() + 1;
  std::vector<double> h(rows * cols, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return h[i * cols + j]; };
  auto sub = [&](std::size_t i, std::size_t j) { return a[i - 1] == b[j - 1] ? params.match : params.mismatch; };

  AlignmentResult result;
  for (std::size_t i = 1; i < rows; ++i) {
    for (std::size_t j = 1; j < cols; ++j) {
      const double diag = at(i - 1, j - 1) + sub(i, j);
      const double up = at(i - 1, j) + params.gap_penalty;
      const double left = at(i, j - 1) + params.gap_penalty;
      const double v = std::max({0.0, diag, up, left});
      at(i, j) = v;
      if (v > result.max_score) {
        result.max_score = v;
        result.max_pos = {i, j};
      }
    }
  }
  if (result.max_score <= 0.0) return result;

  std::size_t i = result.max_pos.row;
  std::size_t j = result.max_pos.col;
  std::size_t steps = 0;
  while (i > 0 && j > 0 && at(i, j) > 0.0) {
    const double v = at(i, j);
    if (v == at(i - 1, j - 1) + sub(i, j)) {
      --i;
      --j;
    } else if (v == at(i - 1, j) + params.gap_penalty) {
      --i;
    } else {
      --j;
    }
    ++steps;
  }
  result.align_len = steps;
  const double pct = 100.0 * result.max_score / (params.match * static_cast<double>(steps));
  result.normalized_similarity_pct = std::clamp(pct, 0.0, 100.0);
  return result;
}

double sw_normalized_similarity_pct(ByteView a, ByteView b, const AlignmentParams& params) {
  return smith_waterman(a, b, params).normalized_similarity_pct;
}

}  // namespace rnnids::simmetrics
