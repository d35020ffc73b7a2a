#include <sepperm/series.hpp>
#include <sepperm/series_io.hpp>

#include <gtest/gtest.h>

#include <filesystem>

#include "test_support.hpp"

using namespace sepperm;

namespace {

RSeries counting(std::initializer_list<int> coeffs, int order) {
  RSeries s(order);
  int n = 0;
  for (int c : coeffs) {
    if (n > order) break;
    s.coeff(n++) = Poly<Rational>(Rational(c));
  }
  return s;
}

}  // namespace

TEST(Series, TimesT) {
  const RSeries a = counting({0, 1, 2}, 4);
  EXPECT_EQ(a * RSeries::t(4), counting({0, 0, 1, 2}, 4));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Series, ArithmeticTruncatesToSmallerOrder) {
  const RSeries a = counting({1, 1, 1, 1, 1, 1}, 5), b = counting({1, 1}, 2);
  EXPECT_EQ((a + b).order(), 2);
  EXPECT_EQ((a * b).order(), 2);
}

TEST(Series, ConvolutionMatchesDirectSum) {
  const RSeries s = counting({0, 1, 2, 6, 22, 90}, 5);
  const RSeries sq = s * s;
  // t^4: 1*6 + 2*2 + 6*1
  EXPECT_EQ(sq[4], Poly<Rational>(Rational(16)));
  EXPECT_EQ(sq[5], Poly<Rational>(Rational(2 * 22 + 2 * 2 * 6)));
}

TEST(Series, InvertGeometric) {
  const RSeries inv = invert(counting({1, -1}, 6));
  EXPECT_EQ(inv, counting({1, 1, 1, 1, 1, 1, 1}, 6));
  EXPECT_EQ(invert(RSeries::constant(Rational(1), 3)), RSeries::constant(Rational(1), 3));
  EXPECT_THROW(invert(RSeries::t(3)), std::domain_error);
  RSeries nonconst(2);
  nonconst.coeff(0) = Poly<Rational>::variable(Var::x);
  EXPECT_THROW(invert(nonconst), std::domain_error);
}

TEST(Series, DivideShiftsValuation) {
  const RSeries q = divide(counting({0, 1, 1}, 4), RSeries::t(4));
  EXPECT_EQ(q.order(), 3);
  EXPECT_EQ(q, counting({1, 1}, 3));
  const RSeries w = counting({0, -4, -4, -8}, 5);
  EXPECT_EQ(divide(w, w), RSeries::constant(Rational(1), 4));
  EXPECT_THROW(divide(RSeries::t(4), RSeries::t(4) * RSeries::t(4)), std::domain_error);
}

TEST(Series, SqrtOfCountingRadical) {
  const int n = 8;
  const RSeries one = RSeries::constant(Rational(1), n), t = RSeries::t(n);
  const RSeries r = sqrt(one - t * Rational(6) + t * t);
  EXPECT_EQ(r.truncated(4), counting({1, -3, -4, -12, -44}, 4));
  EXPECT_EQ(sqrt(one), one);
  EXPECT_THROW(sqrt(counting({2, 1}, 3)), std::domain_error);
}

TEST(SeriesProperty, RingLaws) {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = test_util::uniform(1, 6);
    const RSeries a = test_util::random_series(n), b = test_util::random_series(n), c = test_util::random_series(n);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(SeriesProperty, SqrtSquaresBack) {
  for (int trial = 0; trial < 20; ++trial) {
    const RSeries a = test_util::random_series(test_util::uniform(1, 7), true);
    const RSeries s = sqrt(a);
    EXPECT_EQ(s * s, a);
  }
}

TEST(SeriesProperty, DivideInvertsMultiply) {
  for (int trial = 0; trial < 20; ++trial) {
    const int n = test_util::uniform(1, 7);
    const RSeries a = test_util::random_series(n), b = test_util::random_series(n, true);
    EXPECT_EQ(divide(a * b, b), a);
  }
}

TEST(Series, SpecializeCountingSeries) {
  RSeries s(2);
  s.coeff(1) = Poly<Rational>::parse("xyuv");
  EXPECT_EQ(s.specialize(VarSet{Var::x})[1], Poly<Rational>::parse("yuv"));
}

TEST(Series, IntegralityEnforced) {
  RSeries s(1);
  s.coeff(1) = Poly<Rational>(Rational(1, 2));
  EXPECT_THROW(to_integral(s), NonIntegralError);
  EXPECT_EQ(to_rational(to_integral(counting({0, 3}, 1))), counting({0, 3}, 1));
}

TEST(SeriesIo, RoundTripIsBitExact) {
  for (int trial = 0; trial < 10; ++trial) {
    const RSeries a = test_util::random_series(test_util::uniform(0, 5));
    const std::string text = dump_series(a, "random");
    const RSeries back = series_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(back, a);
    EXPECT_EQ(dump_series(back, "random"), text);
  }
}

TEST(SeriesIo, CacheKeyedByNameAndOrder) {
  const auto dir = std::filesystem::temp_directory_path() / "sepperm-cache-test";
  std::filesystem::remove_all(dir);
  const SeriesCache cache(dir);
  const RSeries a = counting({0, 1, 2, 6}, 3);
  EXPECT_FALSE(cache.load("S", 3));
  cache.store("S", a);
  ASSERT_TRUE(cache.load("S", 3));
  EXPECT_EQ(*cache.load("S", 3), a);
  EXPECT_FALSE(cache.load("S", 4));
  EXPECT_FALSE(cache.load("I", 3));
  EXPECT_FALSE(SeriesCache().load("S", 3));
  std::filesystem::remove_all(dir);
}
