// Small tour of the library: build a few separable permutations, look at
// their statistics, and compare one closed form against enumeration.

#include <sepperm/closed_forms.hpp>
#include <sepperm/distribution.hpp>
#include <sepperm/enumerate.hpp>

#include <iostream>

int main() {
  using namespace sepperm;

  const Permutation a = Permutation::parse("14325"), b = Permutation::parse("4231");
  std::cout << a.to_string() << " (+) " << b.to_string() << " = " << direct_sum(a, b).to_string() << '\n';
  std::cout << a.to_string() << " (-) " << b.to_string() << " = " << skew_sum(a, b).to_string() << '\n';

  const Permutation pi = Permutation::parse("2165743");
  const StatProfile s = stats(pi);
  std::cout << pi.to_string() << ": separable=" << is_separable(pi) << " irreducible=" << is_irreducible(pi)
            << " lmax=" << s.lmax << " rmax=" << s.rmax << " lmin=" << s.lmin << " rmin=" << s.rmin << '\n';

  for (int n = 1; n <= 8; ++n) std::cout << "separable of length " << n << ": " << count_separable(n) << '\n';

  // Distribution of rmax on irreducible separable permutations, two ways.
  ClosedForms cf(7);
  const RSeries closed = cf.single(Stat::rmax, PermClass::irreducible);
  const ZSeries counted = series_from_enumeration(7, PermClass::irreducible).specialize(VarSet{Var::y}.complement());
  std::cout << "closed form: " << closed.to_string() << '\n';
  std::cout << "agrees with enumeration: " << (closed == to_rational(counted)) << '\n';
}
