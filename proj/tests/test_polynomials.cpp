#include <gtest/gtest.h>

#include "mkl/error.hpp"
#include "mkl/int_poly.hpp"
#include "mkl/laurent_poly.hpp"
#include "mkl/series2.hpp"
#include "support.hpp"

using mkl::BigInt;
using mkl::IntPoly;
using mkl::LaurentPoly;
using mkl::Series2;
using testing_support::lp;

TEST(IntPoly, CanonicalForm) {
  EXPECT_TRUE(IntPoly({0, 0}).is_zero());
  EXPECT_EQ(IntPoly({1, 2, 0}).degree(), 1);
  EXPECT_EQ(IntPoly().degree(), -1);
  EXPECT_EQ(IntPoly({1, 2}).coeff(7), 0);
}

TEST(IntPoly, Arithmetic) {
  const IntPoly a{1, 1};
  EXPECT_EQ(a * a, (IntPoly{1, 2, 1}));
  EXPECT_EQ(a.pow(3), (IntPoly{1, 3, 3, 1}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(-a, (IntPoly{-1, -1}));
  EXPECT_EQ(IntPoly::linear_root(2) * IntPoly::linear_root(3), (IntPoly{6, -5, 1}));
  EXPECT_EQ(a.eval(10), 11);
}

TEST(IntPoly, ReverseShiftTruncate) {
  const IntPoly p{1, 2};
  EXPECT_EQ(p.reversed(3), (IntPoly{0, 0, 2, 1}));
  EXPECT_EQ(p.shifted(2), (IntPoly{0, 0, 1, 2}));
  EXPECT_EQ((IntPoly{1, 2, 3}).truncated(2), p);
  try {
    (void)IntPoly({1, 1, 1}).reversed(1);
    FAIL() << "expected DegreeTooLarge";
  } catch (const mkl::Error& e) {
    EXPECT_EQ(e.kind(), mkl::ErrorKind::DegreeTooLarge);
  }
}

TEST(IntPoly, BigCoefficients) {
  IntPoly p = IntPoly::monomial(BigInt("585243816844111425"), 9);
  p *= BigInt("1000000000000");
  EXPECT_EQ(p.coeff(9), BigInt("585243816844111425000000000000"));
}

TEST(IntPoly, Text) {
  EXPECT_EQ((IntPoly{1, 27, 120, 84}).to_string(), "1 + 27t + 120t^2 + 84t^3");
  EXPECT_EQ((IntPoly{2, -3, 1}).to_string(), "2 - 3t + t^2");
  EXPECT_EQ(IntPoly().to_string(), "0");
}

TEST(LaurentPoly, Normalisation) {
  const auto p = lp(-2, {0, 1, 0});
  EXPECT_EQ(p.lowest(), -1);
  EXPECT_EQ(p.highest(), -1);
  EXPECT_TRUE(lp(5, {0}).is_zero());
  EXPECT_EQ(lp(5, {0}).lowest(), 0);
}

TEST(LaurentPoly, Arithmetic) {
  const auto a = lp(-1, {1, 1});  // q^-1 + 1
  EXPECT_EQ(a * a, lp(-2, {1, 2, 1}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.shifted(1), lp(0, {1, 1}));
  EXPECT_TRUE(a.has_negative_exponent());
  EXPECT_FALSE(a.has_negative_coefficient());
  EXPECT_TRUE(lp(0, {1, -1}).has_negative_coefficient());
  EXPECT_EQ(a.at_one(), 2);
  LaurentPoly acc;
  acc.add_product(a, lp(1, {1}));
  EXPECT_EQ(acc, lp(0, {1, 1}));
}

TEST(LaurentPoly, FromPolyInverseSquare) {
  // q^3 (1 + q^-2) = q + q^3
  EXPECT_EQ(LaurentPoly::from_poly_inverse_square(IntPoly{1, 1}, 3), lp(1, {1, 0, 1}));
  EXPECT_EQ(LaurentPoly::from_poly(IntPoly{1, 2}, -1), lp(-1, {1, 2}));
}

TEST(Series2, GeometricInverse) {
  // 1/(1-u) = sum u^k
  Series2 s = Series2::constant(IntPoly{1}, 5) - Series2::monomial(IntPoly{1}, 1, 5);
  const Series2 inv = s.inverse();
  for (long k = 0; k <= 5; ++k) EXPECT_EQ(inv.coeff(k), IntPoly{1});
  EXPECT_TRUE((s * inv).agrees_with(Series2::constant(IntPoly{1}, 5), 5));
}

TEST(Series2, PowersAndComposition) {
  const Series2 one_plus_u = Series2::constant(IntPoly{1}, 4) + Series2::monomial(IntPoly{1}, 1, 4);
  const Series2 cube = one_plus_u.pow(3);
  EXPECT_EQ(cube.coeff(2), IntPoly{3});
  EXPECT_TRUE((cube * one_plus_u.pow(-3)).agrees_with(Series2::constant(IntPoly{1}, 4), 4));
  // (1+u) composed with t*u is 1 + t u
  const Series2 tu = Series2::monomial(IntPoly{0, 1}, 1, 4);
  const Series2 c = one_plus_u.compose(tu);
  EXPECT_EQ(c.coeff(1), (IntPoly{0, 1}));
  EXPECT_TRUE(c.coeff(2).is_zero());
}

TEST(Series2, DerivativeAndShift) {
  // coefficient of u^j in the second divided derivative is C(j+2,2) C(4,j+2)
  Series2 s = (Series2::constant(IntPoly{1}, 6) + Series2::monomial(IntPoly{1}, 1, 6)).pow(4);
  const Series2 d = s.divided_derivative(2);
  EXPECT_EQ(d.order(), 4);
  EXPECT_EQ(d.coeff(0), IntPoly{6});
  EXPECT_EQ(d.coeff(1), IntPoly{12});
  EXPECT_EQ(d.coeff(2), IntPoly{6});
  const Series2 up = s.shifted(2);
  EXPECT_EQ(up.coeff(2), IntPoly{1});
  EXPECT_THROW((void)s.shifted(-1), mkl::Error);
  EXPECT_EQ(up.shifted(-2).coeff(1), IntPoly{4});
}
