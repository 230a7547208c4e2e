#include <gtest/gtest.h>

#include "rnnids/error.hpp"
#include "rnnids/simmetrics/matrix.hpp"

namespace rnnids::simmetrics {
namespace {

TEST(SimilarityMatrix, OriginalsComeFirstAndDiagonalIsFull) {
  std::vector<LabeledSequence> seqs = {
      {"gen1", to_bytes("abcx"), true},
      {"w1", to_bytes("abcd"), false},
      {"w2", to_bytes("abce"), false},
  };
  const SimilarityMatrix m = similarity_matrix(seqs, Metric::levenshtein());
  ASSERT_EQ(m.size(), 3u);
  EXPECT_EQ(m.labels, (std::vector<std::string>{"w1", "w2", "gen1"}));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(m.at(i, i), 100.0);
  EXPECT_DOUBLE_EQ(m.at(0, 1), 75.0);
  EXPECT_DOUBLE_EQ(m.at(1, 0), 75.0);
}

TEST(SimilarityMatrix, CsvShape) {
  std::vector<LabeledSequence> seqs = {{"a", to_bytes("aaaa")}, {"b", to_bytes("aabb")}};
  const SimilarityMatrix m = similarity_matrix(seqs, Metric::smith_waterman({1, -1, -1}));
  const std::string csv = m.to_csv();
  EXPECT_NE(csv.find("a,100.0,\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("b,100.0,100.0\n"), std::string::npos) << csv;
}

TEST(SimilarityMatrix, NeedsTwoSequences) {
  EXPECT_THROW(similarity_matrix({{"only", to_bytes("x")}}, Metric::levenshtein()), NotEnoughSequences);
}

TEST(SimilarityMatrix, PairwiseMatchesMetric) {
  const auto a = to_bytes("hello world");
  const auto b = to_bytes("yellow word");
  EXPECT_DOUBLE_EQ(pairwise_pct(a, b, Metric::levenshtein()), levenshtein_similarity_pct(a, b));
  EXPECT_DOUBLE_EQ(pairwise_pct(a, b, Metric::smith_waterman({5, -1, -1})),
                   sw_normalized_similarity_pct(a, b, {5, -1, -1}));
}

}  // namespace
}  // namespace rnnids::simmetrics
