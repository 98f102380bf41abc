#include "tcs/rational.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

using tcs::ExtSlope;
using tcs::Int;
using tcs::Mat2Z;

TEST(Normalize, ReducesAndCanonicalizesSign) {
  EXPECT_EQ(ExtSlope(4, -6), ExtSlope(-2, 3));
  EXPECT_EQ(ExtSlope(-3, 0), ExtSlope::infinity());
  EXPECT_EQ(ExtSlope(11, 2), ExtSlope(11, 2));
  EXPECT_EQ(ExtSlope(0, -7), ExtSlope(0, 1));
  EXPECT_THROW(ExtSlope(0, 0), std::invalid_argument);
}

TEST(Normalize, Idempotent) {
  for (int p = -12; p <= 12; ++p)
    for (int q = -12; q <= 12; ++q) {
      if (p == 0 && q == 0) continue;
      ExtSlope s(p, q);
      EXPECT_EQ(ExtSlope(s.p, s.q), s);
      EXPECT_GE(s.q, 0);
    }
}

TEST(Parse, AcceptsSignWhitespaceAndInf) {
  EXPECT_EQ(tcs::parse_slope("11/2"), ExtSlope(11, 2));
  EXPECT_EQ(tcs::parse_slope("  -2/3 "), ExtSlope(-2, 3));
  EXPECT_EQ(tcs::parse_slope("+4/-6"), ExtSlope(-2, 3));
  EXPECT_EQ(tcs::parse_slope("inf"), ExtSlope::infinity());
  EXPECT_EQ(tcs::parse_slope("-inf"), ExtSlope::infinity());
  EXPECT_EQ(tcs::parse_slope("7"), ExtSlope(7, 1));
  EXPECT_THROW(tcs::parse_slope(""), std::invalid_argument);
  EXPECT_THROW(tcs::parse_slope("1/x"), std::invalid_argument);
  EXPECT_THROW(tcs::parse_slope("0/0"), std::invalid_argument);
}

TEST(Print, ReducedForm) {
  EXPECT_EQ(tcs::to_string(ExtSlope(4, -6)), "-2/3");
  EXPECT_EQ(tcs::to_string(ExtSlope(-3, 0)), "inf");
  EXPECT_EQ(tcs::to_string(ExtSlope(14, 7)), "2");
}

TEST(Matrix, DeterminantChecked) {
  EXPECT_THROW(Mat2Z(2, 0, 0, 2), std::invalid_argument);
  EXPECT_NO_THROW(Mat2Z(0, 1, 1, 0));  // determinant -1 is allowed
}

TEST(Matrix, ApplyConvention) {
  Mat2Z a1(2, 1, -1, 0);
  EXPECT_EQ(tcs::apply_matrix(a1, ExtSlope(-1, 1)), ExtSlope(-1, 1));
  EXPECT_EQ(tcs::apply_matrix(Mat2Z::identity(), ExtSlope(5, 7)), ExtSlope(5, 7));
  Mat2Z a3_inv(-1, 6, -2, 11);
  EXPECT_EQ(tcs::apply_matrix(a3_inv, ExtSlope(0, 1)), ExtSlope(2, 1));
}

TEST(Matrix, InvertAndCompose) {
  Mat2Z a3(11, -6, 2, -1);
  EXPECT_EQ(tcs::invert(a3), Mat2Z(-1, 6, -2, 11));
  EXPECT_EQ(tcs::compose(a3, tcs::invert(a3)), Mat2Z::identity());
  Mat2Z a1(2, 1, -1, 0);
  EXPECT_EQ(tcs::compose(a1, Mat2Z(1, 0, -1, 1)), Mat2Z(1, 1, -1, 0));
}

TEST(NegCF, WorkedExpansions) {
  EXPECT_EQ(tcs::neg_cf(ExtSlope(-3, 2)), (tcs::NegCF{-2, -2}));
  EXPECT_EQ(tcs::neg_cf(ExtSlope(-11, 9)), (tcs::NegCF{-2, -2, -2, -2, -3}));
  EXPECT_EQ(tcs::neg_cf(ExtSlope(-2, 1)), (tcs::NegCF{-2}));
  EXPECT_EQ(tcs::neg_cf(ExtSlope(-1, 1)), (tcs::NegCF{-1}));
  EXPECT_EQ(tcs::neg_cf(ExtSlope(-5, 2)), (tcs::NegCF{-3, -2}));
}

TEST(NegCF, DomainChecked) {
  EXPECT_THROW(tcs::neg_cf(ExtSlope(-1, 2)), std::invalid_argument);
  EXPECT_THROW(tcs::neg_cf(ExtSlope(3, 1)), std::invalid_argument);
  EXPECT_THROW(tcs::neg_cf(ExtSlope::infinity()), std::invalid_argument);
}

TEST(NegCF, AllEntriesAtMostMinusTwo) {
  for (int q = 1; q <= 40; ++q)
    for (int p = -120; p <= -q; ++p) {
      if (std::gcd(-p, q) != 1) continue;
      tcs::NegCF cf = tcs::neg_cf(ExtSlope(p, q));
      if (p == -q) {
        EXPECT_EQ(cf, (tcs::NegCF{-1}));
        continue;
      }
      for (const Int& r : cf) EXPECT_LE(r, -2);
      EXPECT_EQ(tcs::eval_neg_cf(cf), ExtSlope(p, q));
    }
}
