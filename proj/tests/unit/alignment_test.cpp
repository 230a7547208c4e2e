#include <gtest/gtest.h>

#include "oracles/alignment_oracle.hpp"
#include "oracles/regex_oracle.hpp"
#include "rnnids/error.hpp"
#include "rnnids/simmetrics/alignment.hpp"

namespace rnnids::simmetrics {
namespace {

TEST(Levenshtein, KnownDistances) {
  EXPECT_EQ(levenshtein_distance(to_bytes("kitten"), to_bytes("sitting")), 3u);
  EXPECT_EQ(levenshtein_distance(to_bytes(""), to_bytes("abc")), 3u);
  EXPECT_EQ(levenshtein_distance(to_bytes("same"), to_bytes("same")), 0u);
  EXPECT_EQ(levenshtein_distance(to_bytes("flaw"), to_bytes("lawn")), 2u);
}

TEST(Levenshtein, Similarity) {
  EXPECT_DOUBLE_EQ(levenshtein_similarity_pct(to_bytes("abcd"), to_bytes("abce")), 75.0);
  EXPECT_DOUBLE_EQ(levenshtein_similarity_pct({}, {}), 100.0);
  EXPECT_DOUBLE_EQ(levenshtein_similarity_pct(to_bytes("ab"), to_bytes("cd")), 0.0);
}

TEST(Levenshtein, MetricAxiomsOnSmallStrings) {
  const auto words = oracle::all_strings("ab", 4);
  for (const auto& x : words) {
    for (const auto& y : words) {
      const auto d = levenshtein_distance(to_bytes(x), to_bytes(y));
      EXPECT_EQ(d, levenshtein_distance(to_bytes(y), to_bytes(x)));
      EXPECT_EQ(d == 0, x == y);
      EXPECT_EQ(d, oracle::edit_distance(x, y));
    }
  }
}

TEST(SmithWaterman, ClassicExample) {
  // match 3, mismatch -3, gap -2: the textbook pair scores 13
  const AlignmentParams p{3.0, -3.0, -2.0};
  const auto r = smith_waterman(to_bytes("TGTTACGG"), to_bytes("GGTTGACTA"), p);
  EXPECT_DOUBLE_EQ(r.max_score, 13.0);
  EXPECT_DOUBLE_EQ(r.max_score, oracle::local_score("TGTTACGG", "GGTTGACTA", 3, -3, -2));
}

TEST(SmithWaterman, IdenticalInputsAreFullySimilar) {
  const auto r = smith_waterman(to_bytes("abcdef"), to_bytes("abcdef"));
  EXPECT_DOUBLE_EQ(r.max_score, 6.0);
  EXPECT_EQ(r.align_len, 6u);
  EXPECT_DOUBLE_EQ(r.normalized_similarity_pct, 100.0);
  EXPECT_EQ(r.max_pos, (CellPos{6, 6}));
}

TEST(SmithWaterman, MatchWeightScalesScoreNotPercentage) {
  const auto a = to_bytes("xxabcabyy");
  const auto b = to_bytes("zabcaabz");
  const auto r1 = smith_waterman(a, b, {1, -1, -1});
  const auto r5 = smith_waterman(a, b, {5, -1, -1});
  EXPECT_GE(r5.max_score, 5 * 4.0);
  EXPECT_GE(r1.normalized_similarity_pct, 0.0);
  EXPECT_LE(r5.normalized_similarity_pct, 100.0);
}

TEST(SmithWaterman, NoCommonOctetScoresZero) {
  const auto r = smith_waterman(to_bytes("aaaa"), to_bytes("bbbb"));
  EXPECT_DOUBLE_EQ(r.max_score, 0.0);
  EXPECT_DOUBLE_EQ(r.normalized_similarity_pct, 0.0);
}

TEST(SmithWaterman, Errors) {
  EXPECT_THROW(smith_waterman({}, to_bytes("a")), EmptyInput);
  EXPECT_THROW(smith_waterman(to_bytes("a"), to_bytes("a"), {0.0, -1, -1}), InvalidParams);
  EXPECT_THROW(smith_waterman(to_bytes("a"), to_bytes("a"), {1.0, 1.0, -1}), InvalidParams);
}

TEST(SmithWaterman, AgreesWithSubstringOracle) {
  const auto words = oracle::all_strings("ab", 4);
  for (std::size_t i = 1; i < words.size(); ++i) {
    for (std::size_t j = 1; j < words.size(); ++j) {
      for (const AlignmentParams& p : {AlignmentParams{1, -1, -1}, AlignmentParams{5, -1, -1}, AlignmentParams{2, -1, -2}}) {
        ASSERT_DOUBLE_EQ(smith_waterman(to_bytes(words[i]), to_bytes(words[j]), p).max_score,
                         oracle::local_score(words[i], words[j], p.match, p.mismatch, p.gap_penalty))
            << words[i] << " / " << words[j];
      }
    }
  }
}

TEST(SmithWaterman, NormalizedBounds) {
  const auto words = oracle::all_strings("abc", 3);
  for (std::size_t i = 1; i < words.size(); ++i) {
    for (std::size_t j = 1; j < words.size(); ++j) {
      const double pct = sw_normalized_similarity_pct(to_bytes(words[i]), to_bytes(words[j]));
      EXPECT_GE(pct, 0.0);
      EXPECT_LE(pct, 100.0);
    }
  }
}

}  // namespace
}  // namespace rnnids::simmetrics
