#include <sepperm/closed_forms.hpp>
#include <sepperm/fixpoint.hpp>
#include <sepperm/numbers.hpp>

#include <gtest/gtest.h>

using namespace sepperm;

namespace {

constexpr int kOrder = 7;

const MasterSeries& master() {
  static const MasterSeries m = solve_master_fixpoint(kOrder, VarSet{Var::x, Var::y, Var::u, Var::v});
  return m;
}

RSeries projected(PermClass cls, const std::vector<Stat>& stats) {
  const ZSeries& s = cls == PermClass::all ? master().all : master().irreducible;
  ZSeries z = cls == PermClass::reducible ? master().reducible() : s;
  return to_rational(z.specialize(stat_vars(stats).complement()));
}

const std::vector<Stat> kExtrema = {Stat::lmax, Stat::rmax, Stat::lmin, Stat::rmin};

}  // namespace

TEST(ClosedForms, SingleCoefficientsAtLengthFive) {
  ClosedForms cf(6);
  const Poly<Rational> want = Poly<Rational>::parse("22x + 31x^2 + 26x^3 + 10x^4 + x^5");
  EXPECT_EQ(cf.S(Var::x)[5], want);
}

TEST(ClosedForms, SingleAtOneGivesSchroeder) {
  ClosedForms cf(14);
  const RSeries s = cf.S(Var::y).specialize(VarSet{Var::y});
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(s[n], Poly<Rational>(Rational(schroeder_eq1(n - 1)))) << n;
}

// Every subset of the four extremum statistics, every class.
TEST(ClosedForms, AllBindingsMatchFixpoint) {
  ClosedForms cf(kOrder);
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<Stat> stats;
    for (int i = 0; i < 4; ++i)
      if (mask & (1u << i)) stats.push_back(kExtrema[i]);
    for (PermClass cls : {PermClass::all, PermClass::irreducible, PermClass::reducible}) {
      const RSeries got = cf.evaluate(stats, cls);
      EXPECT_EQ(got, projected(cls, stats)) << "mask " << mask << " class " << class_name(cls);
    }
  }
}

TEST(ClosedForms, EveryPairAndTripleHasOneBinding) {
  ClosedForms cf(3);
  for (std::size_t i = 0; i < kExtrema.size(); ++i)
    for (std::size_t j = i + 1; j < kExtrema.size(); ++j) EXPECT_NO_THROW(cf.pair(kExtrema[i], kExtrema[j], PermClass::all));
  EXPECT_NO_THROW(cf.triple(Stat::lmax, Stat::rmax, Stat::rmin, PermClass::irreducible));
}

TEST(ClosedForms, IrreduciblePairSnippet) {
  ClosedForms cf(6);
  const RSeries i = cf.pair(Stat::lmax, Stat::rmax, PermClass::irreducible);
  EXPECT_EQ(i[4], Poly<Rational>::parse("x^3y^2 + 2x^2y^3 + xy^4 + 2x^2y^2 + 3xy^3 + 2xy^2"));
}

TEST(ClosedForms, RejectsAscentsAndRepeats) {
  ClosedForms cf(4);
  const std::vector<Stat> asc = {Stat::asc};
  const std::vector<Stat> twice = {Stat::lmax, Stat::lmax};
  EXPECT_THROW(cf.evaluate(asc, PermClass::all), std::invalid_argument);
  EXPECT_THROW(cf.evaluate(twice, PermClass::all), std::invalid_argument);
  EXPECT_THROW(ClosedForms(0), std::invalid_argument);
}

TEST(ClosedForms, ResultsAreIntegral) {
  ClosedForms cf(kOrder);
  EXPECT_NO_THROW(to_integral(cf.quad(PermClass::all)));
  EXPECT_NO_THROW(to_integral(cf.triple(Stat::lmin, Stat::rmin, Stat::lmax, PermClass::reducible)));
}
