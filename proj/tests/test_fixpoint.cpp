#include <sepperm/distribution.hpp>
#include <sepperm/fixpoint.hpp>
#include <sepperm/numbers.hpp>

#include <gtest/gtest.h>

using namespace sepperm;
using ZP = Poly<Integer>;

TEST(Fixpoint, FirstCoefficient) {
  const MasterSeries m = solve_master_fixpoint(3);
  EXPECT_EQ(m.all[1], ZP::parse("xyuv"));
  EXPECT_EQ(m.irreducible[1], ZP::parse("xyuv"));
  EXPECT_TRUE(m.all[0].is_zero());
}

TEST(Fixpoint, SecondCoefficientWithoutAscDes) {
  const MasterSeries m = solve_master_fixpoint(4);
  EXPECT_EQ(m.all[2].specialize(VarSet{Var::p, Var::q}), ZP::parse("uv^2x^2y + u^2vxy^2"));
}

TEST(Fixpoint, AscDesAtLengthThree) {
  const MasterSeries m = solve_master_fixpoint(4);
  EXPECT_EQ(m.all[3].specialize(VarSet::parse("xyuv")), ZP::parse("p^2 + 4pq + q^2"));
}

TEST(Fixpoint, AllOnesGivesSchroederNumbers) {
  const MasterSeries m = solve_master_fixpoint(12);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(m.all[n].coefficient_sum(), schroeder_eq1(n - 1));
    EXPECT_EQ(m.irreducible[n].coefficient_sum(), count_irreducible(n));
  }
}

TEST(Fixpoint, NonNegativeCoefficients) {
  const MasterSeries m = solve_master_fixpoint(10);
  for (int n = 0; n <= 10; ++n)
    for (const ZSeries* s : {&m.all, &m.irreducible})
      for (const auto& [mono, c] : (*s)[n].terms()) EXPECT_GT(c, 0);
}

TEST(Fixpoint, MaskedSolveEqualsSpecialization) {
  const MasterSeries full = solve_master_fixpoint(9);
  for (const char* keep : {"", "pq", "xy", "yu", "xyu", "xyuv", "q", "v"}) {
    const VarSet active = VarSet::parse(keep);
    const MasterSeries masked = solve_master_fixpoint(9, active);
    EXPECT_EQ(masked.all, full.all.specialize(active.complement())) << keep;
    EXPECT_EQ(masked.irreducible, full.irreducible.specialize(active.complement())) << keep;
  }
}

TEST(Fixpoint, MatchesEnumerationInAllVariables) {
  const MasterSeries m = solve_master_fixpoint(9);
  Census census;
  EXPECT_EQ(m.all, series_from_enumeration(9, PermClass::all, census));
  EXPECT_EQ(m.irreducible, series_from_enumeration(9, PermClass::irreducible, census));
}

TEST(Fixpoint, SatisfiesFunctionalEquations) {
  const int N = 10;
  const MasterSeries m = solve_master_fixpoint(N);
  const ZSeries& S = m.all;
  const ZSeries& I = m.irreducible;
  const ZSeries xyuv = ZSeries::monomial(1, ZP::parse("xyuv"), N);
  const ZSeries xyu = ZSeries::monomial(1, ZP::parse("xyu"), N);
  const ZSeries skew = ((S.specialize(VarSet{Var::v}) - I.specialize(VarSet{Var::v}) + xyu) * S.specialize(VarSet{Var::x}))
                           .times(ZP::variable(Var::q));
  const ZSeries direct = (S.specialize(VarSet{Var::y}) * I.specialize(VarSet{Var::u})).times(ZP::variable(Var::p));
  EXPECT_EQ(S, xyuv + direct + skew);
  EXPECT_EQ(I, xyuv + skew);
}

TEST(Fixpoint, RejectsBadOrder) { EXPECT_THROW(solve_master_fixpoint(0), std::invalid_argument); }
