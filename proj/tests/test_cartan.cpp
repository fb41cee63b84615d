#include <random>

#include <gtest/gtest.h>

#include "dsp/weight.hpp"
#include "support.hpp"

using namespace dsp;
using dsp::testing::ints;

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(ints({1, 0, -1}), ints({1, 0, -1})), Rational(2));
  EXPECT_EQ(pairing(ints({6, 2, 0}), ints({1, -1, 0})), Rational(4));
  EXPECT_EQ(pairing(ints({0, 0}), ints({5, 3})), Rational(0));
}

TEST(Pairing, LengthMismatch) {
  EXPECT_THROW(pairing(ints({1, 2}), ints({1, 2, 3})), DimensionError);
}

TEST(Pairing, SymmetricAndBilinear) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    auto draw = [&](bool half) {
      std::vector<Rational> v;
      for (std::size_t i = 0; i < n; ++i) v.emplace_back(2 * d(rng) + (half ? 1 : 0), 2);
      return Weight(std::move(v));
    };
    const Weight x = draw(trial % 2), y = draw(trial % 3 == 0), z = draw(trial % 2);
    const Rational c(d(rng));
    EXPECT_EQ(pairing(x, y), pairing(y, x));
    EXPECT_EQ(pairing(x + z, y), pairing(x, y) + pairing(z, y));
    EXPECT_EQ(pairing(c * x, y), c * pairing(x, y));
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(3), ints({1, 0, -1}));
  EXPECT_EQ(rho(1), ints({0}));
  EXPECT_EQ(rho(4), Weight::halves({3, 1, -1, -3}));
  EXPECT_THROW(rho(0), DomainError);
}

TEST(RhoTilde, Examples) {
  EXPECT_EQ(rho_tilde(3), ints({2, 1, 0}));
  EXPECT_EQ(rho_tilde(1), ints({0}));
  EXPECT_EQ(rho_tilde(5), ints({4, 3, 2, 1, 0}));
}

TEST(RhoTilde, ShiftOfRho) {
  for (std::size_t n = 1; n <= 12; ++n) {
    const Rational shift(static_cast<std::int64_t>(n) - 1, 2);
    EXPECT_EQ(rho(n), rho_tilde(n) - Weight::constant(n, shift)) << n;
  }
}

TEST(Hodge, Examples) {
  EXPECT_EQ(hodge_parameter(ints({5, 2, -1})), ints({6, 3, 0}));
  EXPECT_EQ(hodge_parameter(ints({0})), ints({0}));
  EXPECT_EQ(hodge_parameter(Weight::halves({5, -5})), ints({3, -2}));
}

TEST(Hodge, PreservesDifferences) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = dsp::testing::random_highest_weight(rng, 1 + trial % 7);
    const auto h = hodge_parameter(w);
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j) EXPECT_EQ(h[i] - h[j], w[i] - w[j]);
  }
}

TEST(Weight, RejectsMixedCosetsAndThirds) {
  EXPECT_THROW(Weight({Rational(1), Rational(1, 2)}), DomainError);
  EXPECT_THROW(Weight({Rational(1, 3)}), DomainError);
  EXPECT_NO_THROW(Weight::halves({1, -3, 5}));
}

TEST(Weight, Predicates) {
  EXPECT_TRUE(ints({3, 1, 0}).strictly_decreasing());
  EXPECT_FALSE(ints({3, 3, 0}).strictly_decreasing());
  EXPECT_TRUE(ints({3, 3, 0}).non_increasing());
  EXPECT_TRUE(ints({0, 3, 1}).regular());
  EXPECT_FALSE(ints({0, 3, 0}).regular());
}
