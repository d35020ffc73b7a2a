#pragma once

#include <sepperm/poly.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepperm {

/// Power series in t truncated at a fixed order, with polynomial coefficients.
///
/// A series of order N knows c_0 .. c_N exactly and nothing beyond. Binary
/// operations return the minimum order of their operands.
template <class C>
class Series {
 public:
  using Coeff = C;
  using PolyT = Poly<C>;

  explicit Series(int order = 0) : c_(static_cast<std::size_t>(check_order(order)) + 1) {}

  static Series constant(const PolyT& p, int order) {
    Series s(order);
    s.c_[0] = p;
    return s;
  }
  static Series constant(const C& c, int order) { return constant(PolyT(c), order); }

  /// coeff * t^k, truncated at `order`.
  static Series monomial(int k, const PolyT& coeff, int order) {
    Series s(order);
    if (k <= order) s.c_[static_cast<std::size_t>(k)] = coeff;
    return s;
  }
  static Series t(int order) { return monomial(1, PolyT(C(1)), order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const PolyT& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  PolyT& coeff(int n) { return c_.at(static_cast<std::size_t>(n)); }

  /// Index of the first nonzero coefficient, or nullopt for the zero series.
  std::optional<int> valuation() const {
    for (int n = 0; n <= order(); ++n)
      if (!c_[static_cast<std::size_t>(n)].is_zero()) return n;
    return std::nullopt;
  }

  bool is_zero() const { return !valuation().has_value(); }

  Series truncated(int order) const {
    if (order > this->order()) {
      throw std::invalid_argument("cannot extend a truncated series from order " +
                                  std::to_string(this->order()) + " to " + std::to_string(order));
    }
    Series s(order);
    std::copy_n(c_.begin(), order + 1, s.c_.begin());
    return s;
  }

  Series& operator+=(const Series& o) { return combine(o, false); }
  Series& operator-=(const Series& o) { return combine(o, true); }

  Series operator-() const {
    Series s = *this;
    for (auto& p : s.c_) p = -p;
    return s;
  }

  Series& operator*=(const C& s) {
    for (auto& p : c_) p *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const C& s) { return a *= s; }

  friend Series operator*(const Series& a, const Series& b) {
    int n_max = std::min(a.order(), b.order());
    Series r(n_max);
    int va = a.valuation().value_or(n_max + 1);
    int vb = b.valuation().value_or(n_max + 1);
    for (int n = va + vb; n <= n_max; ++n) {
      ProductAccumulator<C> acc;
      for (int i = va; i <= n - vb; ++i) acc.add_product(a[i], b[n - i]);
      r.c_[static_cast<std::size_t>(n)] = acc.finish();
    }
    return r;
  }

  /// Multiplies every coefficient by a polynomial (no t involved).
  Series times(const PolyT& p) const {
    Series s(order());
    for (int n = 0; n <= order(); ++n) s.c_[static_cast<std::size_t>(n)] = (*this)[n] * p;
    return s;
  }

  /// Multiplication by t^k; the order grows by k since the low terms are known zeros.
  Series shifted_up(int k) const {
    Series s(order() + k);
    for (int n = 0; n <= order(); ++n) s.c_[static_cast<std::size_t>(n + k)] = (*this)[n];
    return s;
  }

  /// Division by t^k; requires c_0 .. c_{k-1} to vanish.
  Series shifted_down(int k) const {
    for (int n = 0; n < k && n <= order(); ++n) {
      if (!(*this)[n].is_zero()) {
        throw std::domain_error("series valuation below shift " + std::to_string(k) +
                                " (nonzero coefficient at order " + std::to_string(n) + ")");
      }
    }
    Series s(order() - k);
    for (int n = k; n <= order(); ++n) s.c_[static_cast<std::size_t>(n - k)] = (*this)[n];
    return s;
  }

  Series specialize(VarSet vars) const {
    Series s(order());
    for (int n = 0; n <= order(); ++n) s.c_[static_cast<std::size_t>(n)] = (*this)[n].specialize(vars);
    return s;
  }

  Series rename(const std::array<Var, kNumVars>& target) const {
    Series s(order());
    for (int n = 0; n <= order(); ++n) s.c_[static_cast<std::size_t>(n)] = (*this)[n].rename(target);
    return s;
  }

  /// Applies f to every coefficient, producing a series over another ring.
  template <class F>
  auto map_coefficients(F&& f) const {
    using D = decltype(f(std::declval<const C&>()));
    Series<D> s(order());
    for (int n = 0; n <= order(); ++n) {
      std::vector<typename Poly<D>::Term> terms;
      for (const auto& [m, c] : (*this)[n].terms()) terms.emplace_back(m, f(c));
      s.coeff(n) = Poly<D>::from_terms(std::move(terms));
    }
    return s;
  }

  bool operator==(const Series&) const = default;

  std::string to_string() const {
    std::string s;
    for (int n = 0; n <= order(); ++n) {
      if ((*this)[n].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "t^" + std::to_string(n) + " (" + (*this)[n].to_string() + ")";
    }
    return (s.empty() ? std::string("0") : s) + " + O(t^" + std::to_string(order() + 1) + ")";
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return order;
  }

  Series& combine(const Series& o, bool negate) {
    int n_max = std::min(order(), o.order());
    c_.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
      if (negate) c_[static_cast<std::size_t>(n)] -= o[n];
      else c_[static_cast<std::size_t>(n)] += o[n];
    }
    return *this;
  }

  std::vector<PolyT> c_;
};

using RSeries = Series<Rational>;
using ZSeries = Series<Integer>;

inline RSeries to_rational(const ZSeries& s) {
  return s.map_coefficients([](const Integer& c) { return Rational(c); });
}

/// Converts a rational series to integers; throws NonIntegralError naming the
/// first offending coefficient.
inline ZSeries to_integral(const RSeries& s) {
  for (int n = 0; n <= s.order(); ++n) {
    for (const auto& [m, c] : s[n].terms()) {
      if (!is_integral(c)) {
        throw NonIntegralError("non-integral coefficient " + c.str() + " at t^" +
                               std::to_string(n) + " " + m.to_string());
      }
    }
  }
  return s.map_coefficients([](const Rational& c) { return to_integer(c); });
}

/// Multiplicative inverse; c_0 must be a nonzero constant.
inline RSeries invert(const RSeries& a) {
  auto c0 = a[0].constant_value();
  if (!c0 || *c0 == 0) {
    throw std::domain_error("invert: constant term is not a nonzero constant (" + a[0].to_string() + ")");
  }
  const Rational inv0 = 1 / *c0;
  RSeries b(a.order());
  b.coeff(0) = Poly<Rational>(inv0);
  for (int n = 1; n <= a.order(); ++n) {
    ProductAccumulator<Rational> acc;
    for (int k = 1; k <= n; ++k) acc.add_product(a[k], b[n - k]);
    b.coeff(n) = acc.finish() * Rational(-inv0);
  }
  return b;
}

/// a / b. Any common power of t is cancelled first, which lowers the order of
/// the result by valuation(b).
inline RSeries divide(const RSeries& a, const RSeries& b) {
  auto vb = b.valuation();
  if (!vb) throw std::domain_error("divide: zero divisor");
  auto va = a.valuation();
  if (va && *va < *vb) {
    throw std::domain_error("divide: numerator valuation " + std::to_string(*va) +
                            " below denominator valuation " + std::to_string(*vb));
  }
  RSeries num = a.shifted_down(*vb);
  RSeries den = b.shifted_down(*vb);
  return num * invert(den);
}

/// Square root of a series with constant term exactly 1, by Newton iteration
/// s <- (s + a/s)/2, doubling the number of correct coefficients per step.
inline RSeries sqrt(const RSeries& a) {
  if (a[0] != Poly<Rational>(Rational(1))) {
    throw std::domain_error("sqrt: constant term must be 1, got " + a[0].to_string());
  }
  const int target = a.order();
  RSeries s = RSeries::constant(Rational(1), 0);
  int known = 0;
  while (known < target) {
    int next = std::min(2 * known + 1, target);
    RSeries ext(next);
    for (int n = 0; n <= known; ++n) ext.coeff(n) = s[n];
    RSeries as = a.truncated(next) * invert(ext);
    s = (ext + as) * Rational(1, 2);
    known = next;
  }
  return s;
}

/// Shorthand for a single variable as a polynomial.
template <class C>
Poly<C> var_poly(Var v) {
  return Poly<C>::variable(v);
}

}  // namespace sepperm
