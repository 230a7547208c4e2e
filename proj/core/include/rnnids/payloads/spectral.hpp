#pragma once

#include <cstdint>
#include <vector>

#include "rnnids/bytes.hpp"
#include "rnnids/payloads/encoder.hpp"

namespace rnnids::payloads {

// One row per variant, right-padded with 0x00 to the longest variant. The
// true row lengths are kept so padding never has to be guessed back.
struct SpectralMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;  // row-major, rows * cols
  std::vector<std::size_t> row_lengths;

  std::uint8_t at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
  Bytes row(std::size_t r) const;  // unpadded
  bool operator==(const SpectralMatrix&) const = default;
};

SpectralMatrix build_spectral(const std::vector<Bytes>& variants);
inline SpectralMatrix build_spectral(const PayloadCorpus& corpus) { return build_spectral(corpus.variants); }

// Binary PGM (P5, maxval 255); pixel value equals cell value.
Bytes render_pgm(const SpectralMatrix& m);

// Columns holding a single value across rows [first_row, rows).
std::vector<std::size_t> constant_columns(const SpectralMatrix& m, std::size_t first_row = 0);

}  // namespace rnnids::payloads
