#pragma once

// Exact coefficient rings shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace sepperm {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when a rational quantity that must count something is not an integer.
class NonIntegralError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r) {
  if (!is_integral(r)) {
    throw NonIntegralError("non-integral value " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

}  // namespace sepperm
