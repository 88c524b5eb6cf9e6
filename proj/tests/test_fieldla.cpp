#include <gtest/gtest.h>

#include <cmath>

#include "sheafradon/fieldla.hpp"
#include "support.hpp"

using namespace sheafradon;
using sheafradon::testing::q;

TEST(Field, ArithmeticModP) {
  Field f(7);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  EXPECT_EQ(f.inv(3), 5u);
  EXPECT_EQ(f.add(6, 3), 2u);
  EXPECT_EQ(f.sub(2, 5), 4u);
  EXPECT_EQ(f.neg(0), 0u);
}

TEST(Field, RejectsComposite) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(65521));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_THROW(Field(4), std::invalid_argument);
}

TEST(FpMatrix, RankDependsOnCharacteristic) {
  // det = 2: singular over F_2 only
  for (std::uint32_t p : {2u, 3u}) {
    FpMatrix m(2, 2, Field(p));
    m.set(0, 0, 1);
    m.set(0, 1, 1);
    m.set(1, 0, 1);
    m.set(1, 1, -1);
    EXPECT_EQ(rank(m), p == 2 ? 1u : 2u) << p;
  }
}

TEST(FpMatrix, KernelIsAnnihilated) {
  Field f(5);
  FpMatrix m(2, 4, f);
  const int vals[2][4] = {{1, 2, 0, 3}, {2, 4, 1, 1}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) m.set(r, c, vals[r][c]);
  FpMatrix k = kernel_basis(m);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE(multiply(m, k).is_zero());
  EXPECT_EQ(rank(k), 2u);
  EXPECT_EQ(cokernel_dim(m), 0u);
}

TEST(FpMatrix, SolveFindsPreimageOrNothing) {
  Field f(3);
  FpMatrix a(2, 2, f);
  a.set(0, 0, 1);
  a.set(1, 0, 1);
  FpMatrix b(2, 1, f);
  b.set(0, 0, 2);
  b.set(1, 0, 2);
  auto x = solve(a, b);
  ASSERT_TRUE(x);
  FpMatrix ax = multiply(a, *x);
  EXPECT_EQ(ax.at(0, 0), 2u);
  EXPECT_EQ(ax.at(1, 0), 2u);
  b.set(1, 0, 1);
  EXPECT_FALSE(solve(a, b));
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/2"), q(3, 2));
  EXPECT_EQ(parse_rational("-4/6"), q(-2, 3));
  EXPECT_EQ(parse_rational("0.25"), q(1, 4));
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(Surd, NormalizesSquareFactors) {
  Surd a = Surd::sqrt_of(8);  // 2 sqrt 2
  Surd b = Surd::sqrt_of(2, q(2));
  EXPECT_EQ(a, b);
  EXPECT_EQ(Surd::sqrt_of(9), Surd(q(3)));
  EXPECT_NEAR(a.to_double(), 2.0 * std::sqrt(2.0), 1e-15);
}

TEST(Surd, OrdersAcrossRadicandsExactly) {
  // 7/5 < sqrt 2 < 17/12
  EXPECT_LT(Surd(q(7, 5)), Surd::sqrt_of(2));
  EXPECT_GT(Surd(q(17, 12)), Surd::sqrt_of(2));
  EXPECT_LT(Surd::sqrt_of(2), Surd::sqrt_of(3));
  EXPECT_EQ((Surd::sqrt_of(2) - Surd::sqrt_of(2)).sign(), 0);
  EXPECT_EQ((Surd(q(1)) - Surd::sqrt_of(5, q(1, 2))).sign(), -1);
}

TEST(Surd, ArithmeticWithinOneRadicand) {
  Surd s = Surd(q(1)) + Surd::sqrt_of(3);
  Surd t = s * s;  // 4 + 2 sqrt 3
  EXPECT_EQ(t, Surd(q(4)) + Surd::sqrt_of(3, q(2)));
  EXPECT_EQ(Surd::sqrt_of(6).divided_by_sqrt(6), Surd(q(1)));
  EXPECT_THROW(Surd::sqrt_of(2) + Surd::sqrt_of(3), std::domain_error);
}
