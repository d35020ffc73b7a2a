#pragma once

// Closed-form generating functions for the maxima/minima statistics,
// evaluated as truncated series over the rationals. Every result is a
// series in the variables that record the requested statistics
// (lmax -> x, rmax -> y, lmin -> u, rmin -> v), so it compares directly with
// a specialization of the master series.

#include <sepperm/distribution.hpp>
#include <sepperm/series.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepperm {

/// How the irreducible/reducible split of a pair distribution is obtained.
enum class PairFamily {
  /// I = (S(z2) + 1) t z1 z2 / (1 - S(z1) S(z2)).
  lmax_rmax,
  /// R = S(z1) I(z2); I = S - R.
  rmax_lmin,
  /// Reverse image of rmax_lmin: I = S(z1) I(z2) + t z1 z2.
  lmax_rmin,
};

/// Which of the two triple formulas applies.
enum class TripleFamily {
  /// R = E - z1 z2 z3 t.
  reducible_is_e,
  /// I = E.
  irreducible_is_e,
};

struct PairBinding {
  Stat z1, z2;
  PairFamily family;
};

struct TripleBinding {
  Stat z1, z2, z3;
  TripleFamily family;
};

/// Statistic bound to each formula variable. Confirmed against enumeration
/// by the calibration test; every unordered pair/triple of the four
/// maxima/minima statistics appears exactly once.
inline constexpr std::array<PairBinding, 6> kPairBindings = {{
    {Stat::lmax, Stat::rmax, PairFamily::lmax_rmax},
    {Stat::lmax, Stat::lmin, PairFamily::lmax_rmax},
    {Stat::rmin, Stat::rmax, PairFamily::lmax_rmax},
    {Stat::rmin, Stat::lmin, PairFamily::lmax_rmax},
    {Stat::rmax, Stat::lmin, PairFamily::rmax_lmin},
    {Stat::lmax, Stat::rmin, PairFamily::lmax_rmin},
}};

inline constexpr std::array<TripleBinding, 4> kTripleBindings = {{
    {Stat::lmax, Stat::rmax, Stat::lmin, TripleFamily::reducible_is_e},
    {Stat::rmin, Stat::rmax, Stat::lmin, TripleFamily::reducible_is_e},
    {Stat::lmin, Stat::rmin, Stat::lmax, TripleFamily::irreducible_is_e},
    {Stat::rmax, Stat::rmin, Stat::lmax, TripleFamily::irreducible_is_e},
}};

inline bool is_extremum_stat(Stat s) { return s != Stat::asc && s != Stat::des; }

/// Whether the irreducible single-statistic g.f. is S^2/(1+S) + zt (rmax,
/// lmin) rather than S/(1+S) (lmax, rmin).
inline bool single_is_rmax_like(Stat s) { return s == Stat::rmax || s == Stat::lmin; }

class ClosedForms {
 public:
  explicit ClosedForms(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("closed-form order must be at least 1");
  }

  int order() const { return order_; }

  // -- building blocks -----------------------------------------------------

  /// Single-statistic g.f. S(t, z) via the nested-radical closed form.
  const RSeries& S(Var z) {
    auto it = single_cache_.find(z);
    if (it != single_cache_.end()) return it->second;
    const int w = order_ + 1;  // the division below loses one order
    const RSeries one = RSeries::constant(Rational(1), w);
    const RSeries t = RSeries::t(w);
    const RSeries tz = RSeries::monomial(1, Poly<Rational>::variable(z), w);
    const RSeries root = sqrt(one - t * Rational(6) + t * t);
    const RSeries base = root * Rational(-1, 4) - tz + t * Rational(1, 4) + one * Rational(5, 4);
    const RSeries inner = base * base + root - t - one;
    const RSeries num = sqrt(inner) * Rational(4) - root + tz * Rational(4) + t - one * Rational(3);
    const RSeries den = (root - t - one) * Rational(2);
    return single_cache_.emplace(z, divide(num, den).truncated(order_)).first->second;
  }

  RSeries one() const { return RSeries::constant(Rational(1), order_); }

  /// z1 z2 ... t.
  RSeries t_times(std::initializer_list<Var> vars) const {
    Poly<Rational> m(Rational(1));
    for (Var v : vars) m = m * Poly<Rational>::variable(v);
    return RSeries::monomial(1, m, order_);
  }

  /// Irreducible g.f. of rmax (equivalently lmin): S^2/(1+S) + zt.
  RSeries I(Var z) {
    const RSeries& s = S(z);
    return divide(s * s, one() + s) + t_times({z});
  }

  /// E(t, z1, z2, z3).
  RSeries E(Var z1, Var z2, Var z3) {
    const RSeries &s1 = S(z1), &s2 = S(z2), &s3 = S(z3);
    Poly<Rational> coeff = Poly<Rational>::term(Monomial::of(z1, 2) * Monomial::of(z2) * Monomial::of(z3));
    RSeries num = ((s1 + one()) * (s2 + one()) * (s3 + one())).times(coeff);
    num = RSeries::monomial(2, Poly<Rational>(Rational(1)), order_) * num;
    RSeries den = (one() - s1 * s3) * (one() - s1 * s2);
    return t_times({z1, z2, z3}) + divide(num, den);
  }

  /// A(z2, z3) = S(t, z2) (z3 t + S^2(t, z3) / (S(t, z3) + 1)).
  RSeries A(Var z2, Var z3) {
    const RSeries& s3 = S(z3);
    return S(z2) * (t_times({z3}) + divide(s3 * s3, s3 + one()));
  }

  // -- distributions -------------------------------------------------------

  RSeries single(Stat s, PermClass cls) {
    require_extremum(s);
    const Var z = stat_var(s);
    const RSeries& sz = S(z);
    if (cls == PermClass::all) return sz;
    const RSeries sq_form = divide(sz * sz, one() + sz);  // S^2/(1+S)
    const RSeries lin_form = divide(sz, one() + sz);      // S/(1+S)
    const bool rmax_like = single_is_rmax_like(s);
    if (cls == PermClass::irreducible) return rmax_like ? sq_form + t_times({z}) : lin_form;
    return rmax_like ? lin_form - t_times({z}) : sq_form;
  }

  RSeries pair(Stat a, Stat b, PermClass cls) {
    const PairBinding& bind = find_pair(a, b);
    const Var z1 = stat_var(bind.z1), z2 = stat_var(bind.z2);
    const RSeries &s1 = S(z1), &s2 = S(z2);
    const RSeries tzz = t_times({z1, z2});
    switch (bind.family) {
      case PairFamily::lmax_rmax: {
        const RSeries inv = invert(one() - s1 * s2);
        const RSeries irr = (s2 + one()) * tzz * inv;
        if (cls == PermClass::irreducible) return irr;
        const RSeries red = s1 * irr;
        return cls == PermClass::reducible ? red : irr + red;
      }
      case PairFamily::rmax_lmin:
      case PairFamily::lmax_rmin: {
        const RSeries si = s1 * I(z2);
        const RSeries all = (si + tzz) * invert(one() - si - tzz);
        if (cls == PermClass::all) return all;
        const bool direct = bind.family == PairFamily::rmax_lmin;
        if (cls == PermClass::irreducible) return direct ? all - si : si + tzz;
        return direct ? si : all - si - tzz;
      }
    }
    throw std::logic_error("unreachable pair family");
  }

  /// Full triple g.f. E(z1, z2, z3) / (1 - A(z2, z3) - t z2 z3).
  RSeries triple_all(Var z1, Var z2, Var z3) {
    return E(z1, z2, z3) * invert(one() - A(z2, z3) - t_times({z2, z3}));
  }

  RSeries triple(Stat a, Stat b, Stat c, PermClass cls) {
    const TripleBinding& bind = find_triple(a, b, c);
    const Var z1 = stat_var(bind.z1), z2 = stat_var(bind.z2), z3 = stat_var(bind.z3);
    const RSeries e = E(z1, z2, z3);
    const RSeries a_plus = A(z2, z3) + t_times({z2, z3});
    const RSeries inv = invert(one() - a_plus);
    if (cls == PermClass::all) return e * inv;
    const RSeries tzzz = t_times({z1, z2, z3});
    const RSeries e_minus = e - tzzz;
    // The class not given by E directly.
    const RSeries other = (tzzz + a_plus * e_minus) * inv;
    if (bind.family == TripleFamily::reducible_is_e) {
      return cls == PermClass::reducible ? e_minus : other;
    }
    return cls == PermClass::irreducible ? e : other - tzzz;
  }

  /// Joint lmax, rmax, lmin, rmin g.f. The reducible part is the product of
  /// the irreducible (lmax, rmax, rmin) g.f., which is E(t, y, v, x), and the
  /// full (lmax, lmin, rmin) g.f.
  RSeries quad(PermClass cls) {
    const Var x = Var::x, y = Var::y, u = Var::u, v = Var::v;
    const RSeries irr = t_times({x, y, u, v}) + E(x, y, u) * triple(Stat::rmax, Stat::lmin, Stat::rmin, PermClass::all);
    if (cls == PermClass::irreducible) return irr;
    const RSeries red = E(y, v, x) * triple(Stat::lmax, Stat::lmin, Stat::rmin, PermClass::all);
    return cls == PermClass::reducible ? red : irr + red;
  }

  /// Dispatch on an unordered set of one to four maxima/minima statistics.
  RSeries evaluate(std::span<const Stat> stats, PermClass cls) {
    std::vector<Stat> s(stats.begin(), stats.end());
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("repeated statistic");
    for (Stat st : s) require_extremum(st);
    switch (s.size()) {
      case 1: return single(s[0], cls);
      case 2: return pair(s[0], s[1], cls);
      case 3: return triple(s[0], s[1], s[2], cls);
      case 4: return quad(cls);
      default: throw std::invalid_argument("closed forms cover one to four statistics");
    }
  }

  // -- formula cells exactly as tabulated ----------------------------------

  /// First table row S^2/(1+S) + zt, second row S/(1+S) - zt.
  RSeries single_table_cell(int row, Var z) {
    const RSeries& sz = S(z);
    if (row == 1) return divide(sz * sz, one() + sz) + t_times({z});
    return divide(sz, one() + sz) - t_times({z});
  }

  /// First row: full pair g.f. minus S(z1)I(z2); second row: S(z1)I(z2).
  RSeries pair_table_cell(int row, Var z1, Var z2) {
    const RSeries si = S(z1) * I(z2);
    if (row == 2) return si;
    const RSeries tzz = t_times({z1, z2});
    return (si + tzz) * invert(one() - si - tzz) - si;
  }

 private:
  static void require_extremum(Stat s) {
    if (!is_extremum_stat(s)) {
      throw std::invalid_argument("no closed form for " + std::string(stat_name(s)) +
                                  " (asc/des are covered by the cubic relation)");
    }
  }

  static const PairBinding& find_pair(Stat a, Stat b) {
    for (const auto& p : kPairBindings)
      if ((p.z1 == a && p.z2 == b) || (p.z1 == b && p.z2 == a)) return p;
    throw std::invalid_argument("no pair binding");
  }

  static const TripleBinding& find_triple(Stat a, Stat b, Stat c) {
    std::array<Stat, 3> want{a, b, c};
    std::sort(want.begin(), want.end());
    for (const auto& t : kTripleBindings) {
      std::array<Stat, 3> have{t.z1, t.z2, t.z3};
      std::sort(have.begin(), have.end());
      if (have == want) return t;
    }
    throw std::invalid_argument("no triple binding");
  }

  int order_;
  std::map<Var, RSeries> single_cache_;
};

}  // namespace sepperm
