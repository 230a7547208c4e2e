#include "rnnids/payloads/spectral.hpp"

#include <algorithm>
#include <string>

namespace rnnids::payloads {

Bytes SpectralMatrix::row(std::size_t r) const {
  const auto begin = cells.begin() + static_cast<std::ptrdiff_t>(r * cols);
  return Bytes(begin, begin + static_cast<std::ptrdiff_t>(row_lengths[r]));
}

SpectralMatrix build_spectral(const std::vector<Bytes>& variants) {
  SpectralMatrix m;
  m.rows = variants.size();
  for (const Bytes& v : variants) m.cols = std::max(m.cols, v.size());
  m.cells.assign(m.rows * m.cols, 0x00);
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::copy(variants[r].begin(), variants[r].end(), m.cells.begin() + static_cast<std::ptrdiff_t>(r * m.cols));
    m.row_lengths.push_back(variants[r].size());
  }
  return m;
}

Bytes render_pgm(const SpectralMatrix& m) {
  const std::string header = "P5\n" + std::to_string(m.cols) + " " + std::to_string(m.rows) + "\n255\n";
  Bytes out(header.begin(), header.end());
  out.insert(out.end(), m.cells.begin(), m.cells.end());
  return out;
}

std::vector<std::size_t> constant_columns(const SpectralMatrix& m, std::size_t first_row) {
  std::vector<std::size_t> cols;
  if (first_row >= m.rows) return cols;
  for (std::size_t c = 0; c < m.cols; ++c) {
    const std::uint8_t v = m.at(first_row, c);
    bool same = true;
    for (std::size_t r = first_row + 1; r < m.rows && same; ++r) same = m.at(r, c) == v;
    if (same) cols.push_back(c);
  }
  return cols;
}

}  // namespace rnnids::payloads
