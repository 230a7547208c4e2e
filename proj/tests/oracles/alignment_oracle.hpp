#pragma once

// Brute-force references for the alignment metrics. Deliberately written
// top-down from the definitions so they share no code path with the
// production dynamic programs.

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <tuple>

namespace rnnids::oracle {

// Minimum edit count by memoised recursion over prefixes.
inline std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  std::function<std::size_t(std::size_t, std::size_t)> d = [&](std::size_t i, std::size_t j) -> std::size_t {
    if (i == 0) return j;
    if (j == 0) return i;
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::size_t v = std::min({d(i - 1, j) + 1, d(i, j - 1) + 1, d(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1)});
    memo[key] = v;
    return v;
  };
  return d(a.size(), b.size());
}

// Best global alignment score of two whole strings, linear gaps.
inline double global_score(const std::string& a, const std::string& b, double match, double mismatch, double gap) {
  std::map<std::pair<std::size_t, std::size_t>, double> memo;
  std::function<double(std::size_t, std::size_t)> s = [&](std::size_t i, std::size_t j) -> double {
    if (i == 0) return gap * static_cast<double>(j);
    if (j == 0) return gap * static_cast<double>(i);
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const double v = std::max({s(i - 1, j) + gap, s(i, j - 1) + gap,
                               s(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? match : mismatch)});
    memo[key] = v;
    return v;
  };
  return s(a.size(), b.size());
}

// Local alignment score: the best global score over every pair of
// substrings, the empty pair scoring 0.
inline double local_score(const std::string& a, const std::string& b, double match, double mismatch, double gap) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j <= a.size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        for (std::size_t l = k + 1; l <= b.size(); ++l) {
          best = std::max(best, global_score(a.substr(i, j - i), b.substr(k, l - k), match, mismatch, gap));
        }
      }
    }
  }
  return best;
}

}  // namespace rnnids::oracle
