#pragma once

#include <sepperm/ring.hpp>

#include <span>
#include <vector>

namespace sepperm {

struct Unimodality {
  bool unimodal = false;
  /// Strictly up then strictly down, no plateau anywhere (including the top).
  bool strict = false;
  /// Smallest 1-based index attaining the maximum; 0 for an all-zero row.
  int peak = 0;
};

/// Weak unimodality of row[0..] (index k-1 holds the count for k), judged on
/// the entries with nonzero count only.
inline Unimodality analyze_unimodality(std::span<const Integer> row) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) support.push_back(i);
  Unimodality r;
  if (support.empty()) {
    r.unimodal = r.strict = true;
    return r;
  }
  std::size_t top = support[0];
  for (std::size_t i : support)
    if (row[i] > row[top]) top = i;
  r.peak = static_cast<int>(top) + 1;
  r.unimodal = true;
  r.strict = true;
  bool descending = false;
  for (std::size_t j = 1; j < support.size(); ++j) {
    const Integer& prev = row[support[j - 1]];
    const Integer& cur = row[support[j]];
    if (cur == prev) r.strict = false;
    if (cur < prev) descending = true;
    else if (cur > prev && descending) r.unimodal = false;
  }
  if (!r.unimodal) r.strict = false;
  return r;
}

}  // namespace sepperm
