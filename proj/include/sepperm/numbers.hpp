#pragma once

// Exact integer sequences: Catalan, Schroeder (two formulas), Dyck paths by
// peaks, Stirling numbers and the Eulerian polynomial.

#include <sepperm/poly.hpp>
#include <sepperm/ring.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace sepperm {

namespace detail {

class PascalTable {
 public:
  Integer get(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard lock(mu_);
    while (static_cast<int>(rows_.size()) <= n) {
      const std::size_t m = rows_.size();
      std::vector<Integer> row(m + 1, Integer(1));
      for (std::size_t j = 1; j < m; ++j) row[j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
      rows_.push_back(std::move(row));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Integer>> rows_;
};

inline PascalTable& pascal() {
  static PascalTable table;
  return table;
}

}  // namespace detail

inline Integer binomial(int n, int k) { return detail::pascal().get(n, k); }

inline Integer catalan(int n) {
  if (n < 0) throw std::out_of_range("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

/// s_n = sum_{i=0}^{n} binom(2n - i, i) C_{n-i}.
inline Integer schroeder_eq1(int n) {
  if (n < 0) throw std::out_of_range("schroeder: negative index");
  Integer s = 0;
  for (int i = 0; i <= n; ++i) s += binomial(2 * n - i, i) * catalan(n - i);
  return s;
}

/// Dyck paths of semilength n with exactly k peaks, by dynamic programming
/// over (height, last step, peaks so far). No closed formula involved.
inline Integer dyck_peak_count(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  // ways[h][last_up][peaks]
  const auto H = static_cast<std::size_t>(n) + 1;
  const auto K = static_cast<std::size_t>(n) + 1;
  auto fresh = [&] { return std::vector(H, std::vector(2, std::vector<Integer>(K, Integer(0)))); };
  auto ways = fresh();
  ways[0][0][0] = 1;  // before the first step; "last step down" means no pending peak
  for (int step = 0; step < 2 * n; ++step) {
    auto next = fresh();
    for (std::size_t h = 0; h < H; ++h)
      for (std::size_t up = 0; up < 2; ++up)
        for (std::size_t pk = 0; pk < K; ++pk) {
          const Integer& w = ways[h][up][pk];
          if (w == 0) continue;
          if (h + 1 < H) next[h + 1][1][pk] += w;
          if (h > 0) {
            std::size_t peaks = pk + (up ? 1 : 0);
            if (peaks < K) next[h - 1][0][peaks] += w;
          }
        }
    ways = std::move(next);
  }
  return ways[0][0][static_cast<std::size_t>(k)];
}

/// s_n = sum_{k} 2^k C_{n,k}; C_{n,0} is taken as 0 for n >= 1 and s_0 = 1.
template <class PeakCount>
Integer schroeder_eq2_with(int n, PeakCount&& peaks) {
  if (n < 0) throw std::out_of_range("schroeder: negative index");
  if (n == 0) return 1;
  Integer s = 0;
  Integer pow2 = 1;
  for (int k = 1; k <= n; ++k) {
    pow2 *= 2;
    s += pow2 * Integer(peaks(n, k));
  }
  return s;
}

inline Integer schroeder_eq2(int n) {
  return schroeder_eq2_with(n, [](int m, int k) { return dyck_peak_count(m, k); });
}

/// Stirling numbers of the second kind, S(n, k), by the usual recurrence.
inline Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, Integer(0));
  row[0] = 1;  // S(0, 0)
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = Integer(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// A_n(q) = sum_{k=1}^{n} k! S(n, k) (q - 1)^{n-k}, as a polynomial in q.
inline Poly<Integer> eulerian_poly(int n) {
  if (n < 1) throw std::out_of_range("eulerian_poly: n must be at least 1");
  using P = Poly<Integer>;
  const P q_minus_1 = P::variable(Var::q) - P(Integer(1));
  P result;
  for (int k = 1; k <= n; ++k) {
    P term(factorial(k) * stirling2(n, k));
    for (int i = 0; i < n - k; ++i) term = term * q_minus_1;
    result += term;
  }
  return result;
}

/// y (y + 1) ... (y + n - 1).
inline Poly<Integer> rising_factorial(int n, Var var = Var::y) {
  using P = Poly<Integer>;
  P result(Integer(1));
  for (int i = 0; i < n; ++i) result = result * (P::variable(var) + P(Integer(i)));
  return result;
}

}  // namespace sepperm
