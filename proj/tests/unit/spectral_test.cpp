#include <gtest/gtest.h>

#include "rnnids/payloads/spectral.hpp"

namespace rnnids::payloads {
namespace {

TEST(Spectral, PadsRowsWithZeros) {
  const SpectralMatrix m = build_spectral(std::vector<Bytes>{to_bytes("ab"), to_bytes("abcd")});
  EXPECT_EQ(m.rows, 2u);
  EXPECT_EQ(m.cols, 4u);
  EXPECT_EQ(std::vector<std::uint8_t>(m.cells.begin(), m.cells.begin() + 4), (Bytes{0x61, 0x62, 0x00, 0x00}));
  EXPECT_EQ(m.row(0), to_bytes("ab"));
  EXPECT_EQ(m.row(1), to_bytes("abcd"));
}

TEST(Spectral, SingleVariant) {
  const SpectralMatrix m = build_spectral(std::vector<Bytes>{to_bytes("xyz")});
  EXPECT_EQ(m.rows, 1u);
  EXPECT_EQ(m.cells, to_bytes("xyz"));
}

TEST(Spectral, TrailingZerosSurviveViaRowLengths) {
  const std::vector<Bytes> v = {Bytes{1, 0, 0}, Bytes{1, 2, 3, 4, 5}};
  const SpectralMatrix m = build_spectral(v);
  EXPECT_EQ(m.row(0), v[0]);
  EXPECT_EQ(m.row(1), v[1]);
}

TEST(Pgm, HeaderAndPixels) {
  SpectralMatrix m;
  m.rows = 1;
  m.cols = 2;
  m.cells = {0x00, 0xFF};
  m.row_lengths = {2};
  Bytes want = to_bytes("P5\n2 1\n255\n");
  want.push_back(0x00);
  want.push_back(0xFF);
  EXPECT_EQ(render_pgm(m), want);
  EXPECT_EQ(render_pgm(m), render_pgm(m));
}

TEST(Pgm, AllZeroMatrixIsBlack) {
  const SpectralMatrix m = build_spectral(std::vector<Bytes>{Bytes(5, 0), Bytes(3, 0)});
  const Bytes img = render_pgm(m);
  const std::string header = "P5\n5 2\n255\n";
  ASSERT_EQ(img.size(), header.size() + 10);
  for (std::size_t i = header.size(); i < img.size(); ++i) EXPECT_EQ(img[i], 0);
}

TEST(Spectral, StubColumnsAreConstantAcrossEncodedRows) {
  const Bytes base = to_bytes("\x90\x90\xeb\x1f\x5e\x89\x76\x08\x31\xc0\x88\x46\x07\x89\x46\x0c");
  const PayloadCorpus c = build_corpus(base, Bytes{0x11, 0x22, 0x33}, 20, 5);
  const SpectralMatrix m = build_spectral(c);
  const auto cols = constant_columns(m, 1);
  EXPECT_GE(cols.size(), kStubMarker.size());
  for (std::size_t k = 0; k < kStubMarker.size(); ++k) EXPECT_EQ(cols[k], k);
}

}  // namespace
}  // namespace rnnids::payloads
