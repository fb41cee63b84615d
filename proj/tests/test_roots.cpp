#include <random>

#include <gtest/gtest.h>

#include "dsp/roots.hpp"
#include "support.hpp"

using namespace dsp;
using dsp::testing::ints;

TEST(RootsG, Sizes) {
  EXPECT_EQ(roots_g(2).roots(), (std::vector<Root>{{1, 2}, {2, 1}}));
  EXPECT_EQ(roots_g(3).size(), 6u);
  EXPECT_TRUE(roots_g(1).empty());
}

TEST(CompactRoots, Examples) {
  EXPECT_EQ(compact_roots({2, 1}).roots(), (std::vector<Root>{{1, 2}, {2, 1}}));
  EXPECT_TRUE(compact_roots({1, 1}).empty());
  EXPECT_EQ(compact_roots({2, 2}).size(), 4u);
}

TEST(NoncompactPositive, Examples) {
  EXPECT_EQ(noncompact_positive({2, 1}).roots(), (std::vector<Root>{{1, 3}, {2, 3}}));
  EXPECT_TRUE(noncompact_positive({3, 0}).empty());
  EXPECT_EQ(noncompact_positive({2, 2}).size(), 4u);
}

TEST(PositiveOn, Examples) {
  const auto nc = noncompact_positive({2, 1});
  EXPECT_EQ(positive_on(nc, ints({5, 2, -1})).roots(), (std::vector<Root>{{1, 3}, {2, 3}}));
  EXPECT_EQ(positive_on(nc, ints({5, -1, 2})).roots(), (std::vector<Root>{{1, 3}}));
  EXPECT_TRUE(positive_on(roots_g(3), Weight::zero(3)).empty());
  EXPECT_THROW(positive_on(nc, ints({1, 2})), DimensionError);
}

TEST(SumOfRoots, Examples) {
  EXPECT_EQ(sum_of_roots(RootSet(3, {{1, 2}, {1, 3}, {2, 3}})), ints({2, 0, -2}));
  EXPECT_EQ(sum_of_roots(RootSet(3)), Weight::zero(3));
  EXPECT_EQ(sum_of_roots(RootSet(3, {{1, 3}, {2, 3}})), ints({1, 1, -2}));
}

TEST(RootSet, RejectsBadRoots) {
  EXPECT_THROW(RootSet(3, {{1, 1}}), DomainError);
  EXPECT_THROW(RootSet(3, {{1, 4}}), DomainError);
  EXPECT_EQ(RootSet(3, {{2, 1}, {1, 2}, {2, 1}}).roots(), (std::vector<Root>{{1, 2}, {2, 1}}));
}

TEST(Roots, CompactNoncompactDecomposition) {
  for (int n = 1; n <= 10; ++n)
    for (const auto& sig : dsp::testing::signatures(static_cast<std::size_t>(n))) {
      EXPECT_EQ(roots_g(sig.size()).size(),
                compact_roots(sig).size() + 2 * noncompact_positive(sig).size());
    }
}

TEST(Roots, RegularityEquivalence) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
    const Weight w(std::move(v));
    const bool half = positive_on(roots_g(n), w).size() == n * (n - 1) / 2;
    EXPECT_EQ(half, w.regular()) << to_string(w);
  }
}

TEST(Roots, SumOfPositiveRootsIsTwoRho) {
  for (std::size_t n = 1; n <= 10; ++n)
    EXPECT_EQ(sum_of_roots(positive_on(roots_g(n), rho(n))), Rational(2) * rho(n));
}
