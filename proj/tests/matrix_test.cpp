#include <gtest/gtest.h>

#include "sharptree/errors.hpp"
#include "sharptree/matrix.hpp"
#include "support.hpp"

using namespace sharptree;
using sharptree::testing::symmetric;

TEST(ExactMatrix, ProductsAndTranspose) {
  ExactMatrix a(2, 3);
  a(0, 0) = 1;
  a(0, 2) = Rational(1, 2);
  a(1, 1) = -2;
  const ExactMatrix p = a * a.transpose();
  EXPECT_EQ(p, symmetric(2, {{1, 1, "5/4"}, {2, 2, "4"}}));
  EXPECT_THROW(a * a, DimensionMismatch);
  EXPECT_THROW(a + a.transpose(), DimensionMismatch);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(ExactMatrix, RankAndEchelon) {
  // Rows 1 and 3 are proportional.
  ExactMatrix m(3, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 0; m(1, 1) = 1; m(1, 2) = 1;
  m(2, 0) = 2; m(2, 1) = 4; m(2, 2) = 6;
  const auto form = reduced_row_echelon(m);
  EXPECT_EQ(form.rank(), 2U);
  EXPECT_EQ(form.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(form.reduced(0, 2), Rational(1));
  EXPECT_EQ(form.reduced(1, 2), Rational(1));
  EXPECT_TRUE(form.reduced(2, 0).is_zero() && form.reduced(2, 2).is_zero());
  EXPECT_EQ(rank(ExactMatrix::zero(4)), 0U);
  EXPECT_EQ(rank(ExactMatrix::identity(4)), 4U);
}

TEST(ExactMatrix, InverseOfNonsingularAndSingular) {
  ExactMatrix m(2, 2);
  m(0, 0) = 2; m(0, 1) = 1;
  m(1, 0) = 7; m(1, 1) = 4;
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, ExactMatrix::identity(2));
  EXPECT_FALSE(inverse(symmetric(2, {{1, 2, "1"}, {1, 1, "1"}, {2, 2, "1"}})).has_value());
  EXPECT_TRUE(inverse(ExactMatrix::zero(0)).has_value());
}

TEST(ExactMatrix, SymmetryAndSelect) {
  const ExactMatrix s = symmetric(3, {{1, 2, "1/2"}, {2, 3, "-4"}});
  EXPECT_TRUE(s.is_symmetric());
  ExactMatrix t = s;
  t(0, 1) = 3;
  EXPECT_FALSE(t.is_symmetric());
  const ExactMatrix sub = s.select({1}, {0, 2});
  EXPECT_EQ(sub(0, 0), Rational(1, 2));
  EXPECT_EQ(sub(0, 1), Rational(-4));
  EXPECT_EQ(s.scaled(Rational(2))(1, 2), Rational(-8));
}
