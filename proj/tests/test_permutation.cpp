#include <sepperm/permutation.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "test_support.hpp"

using namespace sepperm;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

template <class F>
void for_all_perms(int n, F&& f) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do f(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}
}  // namespace

TEST(Permutation, RejectsNonBijectionsAndEmpty) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST(Permutation, Serialization) {
  EXPECT_EQ(P("2413").to_string(), "2413");
  const Permutation big = Permutation::parse("10,3,1,2,4,5,6,7,8,9");
  EXPECT_EQ(big.size(), 10);
  EXPECT_EQ(big.to_string(), "10,3,1,2,4,5,6,7,8,9");
}

TEST(Permutation, Reverse) {
  EXPECT_EQ(reverse(P("423165")), P("561324"));
  EXPECT_EQ(reverse(P("1")), P("1"));
  EXPECT_EQ(reverse(P("12")), P("21"));
}

TEST(Permutation, Complement) {
  EXPECT_EQ(complement(P("423165")), P("354612"));
  EXPECT_EQ(complement(P("1")), P("1"));
  EXPECT_EQ(complement(P("21")), P("12"));
}

TEST(Permutation, Inverse) {
  EXPECT_EQ(inverse(P("231")), P("312"));
  EXPECT_EQ(inverse(P("12")), P("12"));
  const Permutation pi = P("42513"), inv = inverse(pi);
  for (int i = 0; i < pi.size(); ++i) EXPECT_EQ(inv[pi[i] - 1], i + 1);
}

TEST(Permutation, Sums) {
  EXPECT_EQ(direct_sum(P("14325"), P("4231")), P("143259786"));
  EXPECT_EQ(skew_sum(P("14325"), P("4231")), P("587694231"));
  EXPECT_EQ(direct_sum(P("1"), P("1")), P("12"));
  EXPECT_EQ(skew_sum(P("1"), P("1")), P("21"));
}

TEST(Statistics, Examples) {
  EXPECT_EQ(stats(P("561423")).des, 2);
  EXPECT_EQ(stats(P("561423")).asc, 3);
  EXPECT_EQ(stats(P("426513")).rmax, 3);
  EXPECT_EQ(stats(P("426153")).rmin, 2);
  EXPECT_EQ(stats(P("425163")).lmax, 3);
  EXPECT_EQ(stats(P("426153")).lmin, 3);
}

TEST(Statistics, ProfileInvariants) {
  for (int n = 1; n <= 6; ++n)
    for_all_perms(n, [&](const Permutation& pi) {
      const StatProfile s = stats(pi);
      EXPECT_EQ(s.asc + s.des, n - 1);
      for (Stat st : {Stat::lmax, Stat::rmax, Stat::lmin, Stat::rmin}) {
        EXPECT_GE(s.get(st), 1);
        EXPECT_LE(s.get(st), n);
      }
      if (pi[0] == n) { EXPECT_EQ(s.lmax, 1); }
      if (pi[n - 1] == n) { EXPECT_EQ(s.rmax, 1); }
    });
}

TEST(Patterns, Containment) {
  EXPECT_TRUE(contains_pattern(P("2413"), P("2413")));
  EXPECT_FALSE(contains_pattern(P("1234"), P("2413")));
  EXPECT_TRUE(contains_pattern(P("35142"), P("3142")));
}

TEST(Patterns, Separability) {
  EXPECT_FALSE(is_separable(P("2413")));
  EXPECT_FALSE(is_separable(P("3142")));
  EXPECT_TRUE(is_separable(P("1")));
  int count = 0;
  for_all_perms(4, [&](const Permutation& pi) { count += is_separable(pi); });
  EXPECT_EQ(count, 22);
}

TEST(Components, Examples) {
  const auto parts = components(P("312546978"));
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts[0], P("312"));
  EXPECT_EQ(parts[1], P("21"));
  EXPECT_EQ(parts[2], P("1"));
  EXPECT_EQ(parts[3], P("312"));
  EXPECT_EQ(components(P("1")).size(), 1u);
  EXPECT_EQ(components(P("42513")).size(), 1u);
}

TEST(Components, Irreducibility) {
  EXPECT_TRUE(is_irreducible(P("42513")));
  EXPECT_TRUE(is_irreducible(P("1")));
  EXPECT_FALSE(is_irreducible(P("12")));
}

TEST(Components, ReassembleByDirectSum) {
  for (int trial = 0; trial < 200; ++trial) {
    const Permutation pi = test_util::random_separable(test_util::uniform(1, 10));
    const auto parts = components(pi);
    Permutation acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
    EXPECT_EQ(acc, pi);
    for (const auto& c : parts) EXPECT_TRUE(is_irreducible(c));
  }
}

TEST(Blocks, Example) {
  const BlockDecomposition d = block_decompose(P("2165743"));
  ASSERT_EQ(d.m(), 2);
  EXPECT_EQ(d.left[0], (std::vector<int>{2, 1}));
  EXPECT_EQ(d.left[1], (std::vector<int>{6, 5}));
  EXPECT_EQ(d.right[0], (std::vector<int>{4, 3}));
  EXPECT_TRUE(d.right[1].empty());
}

TEST(Blocks, SingletonAndRejection) {
  EXPECT_EQ(block_decompose(P("1")).m(), 0);
  EXPECT_THROW(block_decompose(P("2413")), std::invalid_argument);
}

TEST(Blocks, IntervalStructureAndReassembly) {
  for (int trial = 0; trial < 300; ++trial) {
    const Permutation pi = test_util::random_separable(test_util::uniform(1, 10));
    const BlockDecomposition d = block_decompose(pi);
    EXPECT_EQ(d.reassemble(pi.size()), std::vector<int>(pi.values().begin(), pi.values().end()));
    // L_1 < R_1 < L_2 < R_2 < ... by values.
    std::vector<const std::vector<int>*> chain;
    for (int i = 0; i < d.m(); ++i) {
      chain.push_back(&d.left[static_cast<std::size_t>(i)]);
      chain.push_back(&d.right[static_cast<std::size_t>(i)]);
    }
    int prev_max = 0;
    for (const auto* b : chain) {
      if (b->empty()) continue;
      EXPECT_GT(*std::min_element(b->begin(), b->end()), prev_max);
      prev_max = *std::max_element(b->begin(), b->end());
    }
  }
}

TEST(Symmetries, Involutions) {
  for (int n = 1; n <= 6; ++n)
    for_all_perms(n, [](const Permutation& pi) {
      EXPECT_EQ(reverse(reverse(pi)), pi);
      EXPECT_EQ(complement(complement(pi)), pi);
      EXPECT_EQ(inverse(inverse(pi)), pi);
    });
}

TEST(Symmetries, StatisticSwapsExhaustive) {
  for (int n = 1; n <= 8; ++n)
    for_all_perms(n, [](const Permutation& pi) {
      const StatProfile a = stats(pi), r = stats(reverse(pi)), c = stats(complement(pi)), i = stats(inverse(pi));
      ASSERT_EQ(r.asc, a.des);
      ASSERT_EQ(r.lmax, a.rmax);
      ASSERT_EQ(r.lmin, a.rmin);
      ASSERT_EQ(c.asc, a.des);
      ASSERT_EQ(c.lmax, a.lmin);
      ASSERT_EQ(c.rmax, a.rmin);
      ASSERT_EQ(i.lmax, a.rmin);
      ASSERT_EQ(i.rmin, a.lmax);
      ASSERT_EQ(i.rmax, a.rmax);
      ASSERT_EQ(i.lmin, a.lmin);
    });
}

TEST(Symmetries, SeparabilityAndReducibilityExhaustive) {
  for (int n = 2; n <= 8; ++n)
    for_all_perms(n, [](const Permutation& pi) {
      ASSERT_EQ(is_irreducible(inverse(pi)), is_irreducible(pi));
      if (!is_separable(pi)) return;
      ASSERT_TRUE(is_separable(reverse(pi)));
      ASSERT_TRUE(is_separable(complement(pi)));
      ASSERT_TRUE(is_separable(inverse(pi)));
      ASSERT_NE(is_irreducible(reverse(pi)), is_irreducible(pi));
      ASSERT_NE(is_irreducible(complement(pi)), is_irreducible(pi));
    });
}

TEST(Symmetries, ReverseFlipNeedsSeparability) {
  // 2413 and its reverse 3142 are both irreducible.
  EXPECT_TRUE(is_irreducible(P("2413")));
  EXPECT_TRUE(is_irreducible(reverse(P("2413"))));
}
