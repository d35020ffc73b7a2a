#pragma once

#include <sepperm/permutation.hpp>
#include <sepperm/series.hpp>

#include <random>

namespace sepperm::test_util {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random polynomial in up to three variables with small rational coefficients.
inline Poly<Rational> random_poly(int max_terms = 4, int max_exp = 3) {
  std::vector<Poly<Rational>::Term> terms;
  const int k = uniform(0, max_terms);
  for (int i = 0; i < k; ++i) {
    Monomial m = Monomial::of(Var::x, uniform(0, max_exp)) * Monomial::of(Var::y, uniform(0, max_exp)) *
                 Monomial::of(Var::p, uniform(0, 1));
    terms.emplace_back(m, Rational(uniform(-5, 5), uniform(1, 3)));
  }
  return Poly<Rational>::from_terms(std::move(terms));
}

inline RSeries random_series(int order, bool unit_constant = false) {
  RSeries s(order);
  for (int n = 0; n <= order; ++n) s.coeff(n) = random_poly();
  if (unit_constant) s.coeff(0) = Poly<Rational>(Rational(1));
  return s;
}

/// Random separable permutation of length n built from random sums.
inline Permutation random_separable(int n) {
  if (n == 1) return Permutation{1};
  const int a = uniform(1, n - 1);
  const Permutation l = random_separable(a), r = random_separable(n - a);
  return uniform(0, 1) ? direct_sum(l, r) : skew_sum(l, r);
}

}  // namespace sepperm::test_util
