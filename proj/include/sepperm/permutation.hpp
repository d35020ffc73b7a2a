#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sepperm {

/// A permutation of {1, ..., n}, n >= 1, in one-line notation.
///
/// The empty permutation is deliberately unrepresentable: it is neither
/// separable, reducible nor irreducible, so APIs that could produce it
/// return an empty container or optional instead.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) { validate(); }
  Permutation(std::initializer_list<int> values) : values_(values) { validate(); }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// Digit string ("2413") or comma-separated integers ("10,3,1,...").
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  std::span<const int> values() const { return values_; }

  /// Digits for n <= 9, comma-separated integers otherwise.
  std::string to_string() const {
    std::string s;
    const bool digits = size() <= 9;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!digits && i > 0) s += ',';
      s += std::to_string(values_[i]);
    }
    return s;
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  void validate() const {
    if (values_.empty()) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<int> values_;
};

inline Permutation Permutation::parse(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string item(text.substr(start, end - start));
      if (item.empty()) throw std::invalid_argument("empty entry in permutation");
      v.push_back(std::stoi(item));
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("bad digit in permutation");
      v.push_back(c - '0');
    }
  }
  return Permutation(std::move(v));
}

// -- symmetries and sums ---------------------------------------------------

inline Permutation reverse(const Permutation& pi) {
  std::vector<int> v(pi.values().rbegin(), pi.values().rend());
  return Permutation(std::move(v));
}

inline Permutation complement(const Permutation& pi) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(pi.size()));
  for (int x : pi.values()) v.push_back(pi.size() + 1 - x);
  return Permutation(std::move(v));
}

inline Permutation inverse(const Permutation& pi) {
  std::vector<int> v(static_cast<std::size_t>(pi.size()));
  for (int i = 0; i < pi.size(); ++i) v[static_cast<std::size_t>(pi[i] - 1)] = i + 1;
  return Permutation(std::move(v));
}

inline Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v(a.values().begin(), a.values().end());
  for (int x : b.values()) v.push_back(x + a.size());
  return Permutation(std::move(v));
}

inline Permutation skew_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> v;
  for (int x : a.values()) v.push_back(x + b.size());
  v.insert(v.end(), b.values().begin(), b.values().end());
  return Permutation(std::move(v));
}

/// Order-isomorphic copy of `values` on {1, ..., k}.
inline Permutation standardize(std::span<const int> values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
  });
  std::vector<int> out(values.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[static_cast<std::size_t>(idx[r])] = static_cast<int>(r) + 1;
  return Permutation(std::move(out));
}

// -- statistics -------------------------------------------------------------

enum class Stat { asc, des, lmax, rmax, lmin, rmin };

inline constexpr Stat kAllStats[] = {Stat::asc, Stat::des, Stat::lmax, Stat::rmax, Stat::lmin, Stat::rmin};

inline std::string_view stat_name(Stat s) {
  switch (s) {
    case Stat::asc: return "asc";
    case Stat::des: return "des";
    case Stat::lmax: return "lmax";
    case Stat::rmax: return "rmax";
    case Stat::lmin: return "lmin";
    case Stat::rmin: return "rmin";
  }
  return "?";
}

inline Stat parse_stat(std::string_view name) {
  for (Stat s : kAllStats)
    if (stat_name(s) == name) return s;
  throw std::invalid_argument("unknown statistic '" + std::string(name) +
                              "' (expected asc, des, lmax, rmax, lmin, rmin)");
}

struct StatProfile {
  int asc = 0;
  int des = 0;
  int lmax = 0;
  int rmax = 0;
  int lmin = 0;
  int rmin = 0;

  int get(Stat s) const {
    switch (s) {
      case Stat::asc: return asc;
      case Stat::des: return des;
      case Stat::lmax: return lmax;
      case Stat::rmax: return rmax;
      case Stat::lmin: return lmin;
      case Stat::rmin: return rmin;
    }
    return 0;
  }
  bool operator==(const StatProfile&) const = default;
};

/// All six statistics in two passes over `v` (nonempty, any distinct values).
inline StatProfile stats_of(std::span<const int> v) {
  StatProfile s;
  const std::size_t n = v.size();
  int hi = v[0], lo = v[0];
  s.lmax = s.lmin = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (v[i] > v[i - 1]) ++s.asc;
    else ++s.des;
    if (v[i] > hi) { hi = v[i]; ++s.lmax; }
    if (v[i] < lo) { lo = v[i]; ++s.lmin; }
  }
  hi = lo = v[n - 1];
  s.rmax = s.rmin = 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    if (v[i] > hi) { hi = v[i]; ++s.rmax; }
    if (v[i] < lo) { lo = v[i]; ++s.rmin; }
  }
  return s;
}

inline StatProfile stats(const Permutation& pi) { return stats_of(pi.values()); }

// -- patterns and structure -------------------------------------------------

namespace detail {

inline bool match_from(std::span<const int> text, std::span<const int> pat, std::size_t start,
                       std::vector<int>& chosen) {
  const std::size_t k = chosen.size();
  if (k == pat.size()) return true;
  for (std::size_t i = start; i + (pat.size() - k) <= text.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = (chosen[j] < text[i]) == (pat[j] < pat[k]);
    }
    if (!ok) continue;
    chosen.push_back(text[i]);
    if (match_from(text, pat, i + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// True iff some subsequence of `text` is order-isomorphic to `pattern`.
inline bool contains_pattern(std::span<const int> text, std::span<const int> pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return detail::match_from(text, pattern, 0, chosen);
}

inline bool contains_pattern(const Permutation& pi, const Permutation& pattern) {
  return contains_pattern(pi.values(), pattern.values());
}

/// Separable iff the permutation avoids 2413 and 3142.
inline bool is_separable(std::span<const int> v) {
  static constexpr int p2413[] = {2, 4, 1, 3};
  static constexpr int p3142[] = {3, 1, 4, 2};
  return !contains_pattern(v, p2413) && !contains_pattern(v, p3142);
}

inline bool is_separable(const Permutation& pi) { return is_separable(pi.values()); }

/// Half-open position ranges of the irreducible components (cuts where the
/// prefix holds exactly the smallest values).
inline std::vector<std::pair<int, int>> component_ranges(std::span<const int> v) {
  std::vector<std::pair<int, int>> ranges;
  int start = 0;
  int prefix_max = 0;
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    prefix_max = std::max(prefix_max, v[static_cast<std::size_t>(i)]);
    if (prefix_max == i + 1) {
      ranges.emplace_back(start, i + 1);
      start = i + 1;
    }
  }
  return ranges;
}

inline bool is_irreducible(std::span<const int> v) { return component_ranges(v).size() == 1; }
inline bool is_irreducible(const Permutation& pi) { return is_irreducible(pi.values()); }

/// Irreducible components, each standardized to a permutation.
inline std::vector<Permutation> components(const Permutation& pi) {
  std::vector<Permutation> out;
  for (auto [b, e] : component_ranges(pi.values())) {
    out.push_back(standardize(pi.values().subspan(static_cast<std::size_t>(b), static_cast<std::size_t>(e - b))));
  }
  return out;
}

/// pi = L_1 L_2 ... L_m n R_m ... R_1 with L_1 < R_1 < L_2 < ... < L_m < R_m.
///
/// Blocks hold the original values of pi (they are value intervals). Only
/// left.front() (L_1) and right.back() (R_m) may be empty.
struct BlockDecomposition {
  std::vector<std::vector<int>> left;   // L_1 .. L_m
  std::vector<std::vector<int>> right;  // R_1 .. R_m

  int m() const { return static_cast<int>(left.size()); }

  /// Concatenates L_1 ... L_m n R_m ... R_1.
  std::vector<int> reassemble(int n) const {
    std::vector<int> out;
    for (const auto& b : left) out.insert(out.end(), b.begin(), b.end());
    out.push_back(n);
    for (auto it = right.rbegin(); it != right.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
  }
};

/// Splits the values below n into maximal runs lying on one side of n, then
/// checks the runs occupy the positions the structure requires.
inline BlockDecomposition block_decompose(const Permutation& pi) {
  if (!is_separable(pi)) throw std::invalid_argument("block_decompose: " + pi.to_string() + " is not separable");
  const int n = pi.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(pi[i])] = i;
  const int top = pos[static_cast<std::size_t>(n)];

  BlockDecomposition d;
  // Runs by side in increasing value order: left runs are L's, right runs are R's.
  std::vector<std::vector<int>> runs;
  std::vector<bool> run_left;
  for (int value = 1; value < n; ++value) {
    bool left = pos[static_cast<std::size_t>(value)] < top;
    if (runs.empty() || run_left.back() != left) {
      runs.emplace_back();
      run_left.push_back(left);
    }
    runs.back().push_back(value);
  }
  std::size_t r = 0;
  if (!runs.empty() && !run_left[0]) d.left.emplace_back();  // L_1 empty
  for (; r < runs.size(); ++r) {
    if (run_left[r]) d.left.push_back(runs[r]);
    else d.right.push_back(runs[r]);
  }
  if (d.right.size() < d.left.size()) d.right.emplace_back();  // R_m empty

  // Replace value sets by the blocks as they appear in pi.
  auto in_order = [&](std::vector<int>& block) {
    std::sort(block.begin(), block.end(), [&](int a, int b) {
      return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)];
    });
  };
  for (auto& b : d.left) in_order(b);
  for (auto& b : d.right) in_order(b);
  if (d.reassemble(n) != std::vector<int>(pi.values().begin(), pi.values().end())) {
    throw std::logic_error("block_decompose: blocks of " + pi.to_string() + " are not contiguous");
  }
  return d;
}

}  // namespace sepperm
