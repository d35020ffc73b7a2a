#pragma once

#include <sepperm/permutation.hpp>
#include <sepperm/ring.hpp>

#include <algorithm>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace sepperm {

/// Largest length accepted by the brute-force filter enumerator.
inline constexpr int kFilterMaxLength = 9;
/// Largest length for materialized (sorted) structural enumeration.
inline constexpr int kMaterializeMaxLength = 12;
/// Hard cap for streaming structural enumeration.
inline constexpr int kStreamMaxLength = 14;

namespace detail {

/// Non-owning callable reference; the referenced callable must outlive it.
template <class Sig>
class FunctionRef;

template <class R, class... Args>
class FunctionRef<R(Args...)> {
 public:
  template <class F, class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, FunctionRef>>>
  FunctionRef(F&& f) noexcept  // NOLINT(google-explicit-constructor)
      : obj_(const_cast<void*>(static_cast<const void*>(std::addressof(f)))),
        call_([](void* o, Args... args) -> R {
          return (*static_cast<std::add_pointer_t<std::remove_reference_t<F>>>(o))(std::forward<Args>(args)...);
        }) {}

  R operator()(Args... args) const { return call_(obj_, std::forward<Args>(args)...); }

 private:
  void* obj_;
  R (*call_)(void*, Args...);
};

/// Canonical structural generator.
///
/// Every separable permutation of length >= 2 is uniquely alpha (+) beta with
/// alpha (+)-indecomposable, or alpha (-) beta with alpha (-)-indecomposable.
/// Blocks are written in place into one buffer, continuation style.
class StructuralGenerator {
 public:
  enum class Shape { any, sum_indecomposable, skew_indecomposable };

  explicit StructuralGenerator(int n) : buf_(static_cast<std::size_t>(n)) {}

  std::span<const int> current() const { return buf_; }

  void generate(Shape shape, int len, int pos, int base, FunctionRef<void()> k) {
    if (len == 1) {
      buf_[static_cast<std::size_t>(pos)] = base + 1;
      k();
      return;
    }
    if (shape != Shape::sum_indecomposable) sums(len, pos, base, 1, len - 1, 0, 1, k);
    if (shape != Shape::skew_indecomposable) skews(len, pos, base, 1, len - 1, 0, 1, k);
  }

  /// Direct sums whose first component has length in [lo, hi]; only every
  /// `stride`-th choice starting at `offset` is taken.
  void sums(int len, int pos, int base, int lo, int hi, int offset, int stride, FunctionRef<void()> k) {
    for (int a = lo; a <= hi; ++a) {
      if ((a - lo) % stride != offset) continue;
      generate(Shape::sum_indecomposable, a, pos, base, [&] {
        generate(Shape::any, len - a, pos + a, base + a, k);
      });
    }
  }

  void skews(int len, int pos, int base, int lo, int hi, int offset, int stride, FunctionRef<void()> k) {
    for (int a = lo; a <= hi; ++a) {
      if ((a - lo) % stride != offset) continue;
      generate(Shape::skew_indecomposable, a, pos, base + len - a, [&] {
        generate(Shape::any, len - a, pos + a, base, k);
      });
    }
  }

 private:
  std::vector<int> buf_;
};

inline void check_length(int n, int cap, const char* what) {
  if (n < 1) throw std::out_of_range(std::string(what) + ": length must be at least 1");
  if (n > cap) {
    throw std::out_of_range(std::string(what) + " capped at n=" + std::to_string(cap) +
                            " (requested " + std::to_string(n) + ")");
  }
}

}  // namespace detail

/// Streams every separable permutation of length n exactly once, in canonical
/// decomposition order (not lexicographic). With parts > 1 only the share
/// `part` of a partition on the top-level block choice is produced; the
/// shares are disjoint and cover everything.
template <class Visitor>
void for_each_separable(int n, Visitor&& visit, int part = 0, int parts = 1) {
  detail::check_length(n, kStreamMaxLength, "structural enumeration");
  if (parts < 1 || part < 0 || part >= parts) throw std::invalid_argument("bad partition");
  using G = detail::StructuralGenerator;
  G gen(n);
  auto emit = [&] { visit(gen.current()); };
  if (n == 1) {
    if (part == 0) gen.generate(G::Shape::any, 1, 0, 0, emit);
    return;
  }
  // Top-level choices: (sum, a) for a = 1..n-1, then (skew, a).
  const int choices = n - 1;
  for (int c = part; c < 2 * choices; c += parts) {
    int a = c % choices + 1;
    if (c < choices) gen.sums(n, 0, 0, a, a, 0, 1, emit);
    else gen.skews(n, 0, 0, a, a, 0, 1, emit);
  }
}

/// Irreducible (sum-indecomposable) separable permutations only.
template <class Visitor>
void for_each_irreducible_separable(int n, Visitor&& visit) {
  detail::check_length(n, kStreamMaxLength, "structural enumeration");
  using G = detail::StructuralGenerator;
  G gen(n);
  gen.generate(G::Shape::sum_indecomposable, n, 0, 0, [&] { visit(gen.current()); });
}

/// All separable permutations of length n by filtering S_n through the
/// pattern test. Lexicographic order.
inline std::vector<Permutation> enumerate_filter(int n) {
  detail::check_length(n, kFilterMaxLength, "filter enumeration");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Permutation> out;
  do {
    if (is_separable(v)) out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

/// All separable permutations of length n from the structural generator,
/// sorted lexicographically.
inline std::vector<Permutation> enumerate_structural(int n) {
  detail::check_length(n, kMaterializeMaxLength, "materialized structural enumeration");
  std::vector<Permutation> out;
  for_each_separable(n, [&](std::span<const int> v) {
    out.emplace_back(std::vector<int>(v.begin(), v.end()));
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct ShapeCounts {
  std::vector<Integer> any, sum_indec, skew_indec;
};

/// Counts by the same decomposition the generator uses.
inline ShapeCounts shape_counts(int n) {
  ShapeCounts c;
  const auto size = static_cast<std::size_t>(n) + 1;
  c.any.assign(size, 0);
  c.sum_indec.assign(size, 0);
  c.skew_indec.assign(size, 0);
  if (n >= 1) c.any[1] = c.sum_indec[1] = c.skew_indec[1] = 1;
  for (std::size_t len = 2; len < size; ++len) {
    Integer sums = 0, skews = 0;
    for (std::size_t a = 1; a < len; ++a) {
      sums += c.sum_indec[a] * c.any[len - a];
      skews += c.skew_indec[a] * c.any[len - a];
    }
    c.any[len] = sums + skews;
    c.sum_indec[len] = skews;
    c.skew_indec[len] = sums;
  }
  return c;
}

}  // namespace detail

inline Integer count_separable(int n) {
  if (n < 1) throw std::out_of_range("count_separable: length must be at least 1");
  return detail::shape_counts(n).any[static_cast<std::size_t>(n)];
}

inline Integer count_irreducible(int n) {
  if (n < 1) throw std::out_of_range("count_irreducible: length must be at least 1");
  return detail::shape_counts(n).sum_indec[static_cast<std::size_t>(n)];
}

}  // namespace sepperm
