#include "tcs/counting.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

using tcs::ExtSlope;
using tcs::Int;

namespace {
ExtSlope S(const char* t) { return tcs::parse_slope(t); }
}  // namespace

TEST(SolidTorus, NormalForm) {
  // Meridian-fixing twists act as q -> q mod p; -1/2 lands on the standard
  // neighborhood slope -1 (unique tight structure), not on an integer shift.
  EXPECT_EQ(tcs::solid_torus_normal_form(S("-1/2")), S("-1"));
  EXPECT_EQ(tcs::solid_torus_normal_form(S("2")), S("-2"));
  EXPECT_EQ(tcs::solid_torus_normal_form(S("-11/9")), S("-11/9"));
  EXPECT_EQ(tcs::solid_torus_normal_form(S("inf")), S("-1"));
  EXPECT_THROW(tcs::solid_torus_normal_form(S("0")), std::invalid_argument);
}

TEST(SolidTorus, WorkedCounts) {
  EXPECT_EQ(tcs::count_solid_torus(S("2")), 2);
  EXPECT_EQ(tcs::count_solid_torus(S("-1")), 1);
  for (int n = -1; n >= -10; --n)
    EXPECT_EQ(tcs::count_solid_torus(ExtSlope(1, n)), 1);
  EXPECT_EQ(tcs::count_solid_torus(S("-11/9")), 3);
  EXPECT_THROW(tcs::count_solid_torus(S("0")), std::invalid_argument);
}

TEST(SolidTorus, AgreesWithSignEnumeration) {
  for (int p = 2; p <= 12; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ExtSlope s(-p, q);
      EXPECT_EQ(tcs::count_solid_torus(s), oracle::count_solid_torus_brute(s))
          << tcs::to_string(s);
    }
}

TEST(ThickenedTorus, Counts) {
  EXPECT_EQ(tcs::count_t2i(S("-2"), S("-1")), 2);  // consecutive slopes
  EXPECT_EQ(tcs::count_t2i(S("-1/5"), S("inf")), 6);
  EXPECT_EQ(tcs::count_t2i(S("-1/2"), S("inf")), 3);
  EXPECT_THROW(tcs::count_t2i(S("1"), S("1")), std::invalid_argument);
}

TEST(ThickenedTorus, MatchesShuffleEnumeration) {
  auto slopes = oracle::slopes_up_to(5);
  for (const auto& s0 : slopes)
    for (const auto& s1 : slopes) {
      if (s0 == s1) continue;
      tcs::SliceDecomposition d = tcs::decompose(s0, s1);
      EXPECT_EQ(tcs::count_t2i(d), Int(oracle::shuffle_classes_brute(d)));
    }
}

TEST(SignClasses, CanonicalRepresentatives) {
  tcs::SliceDecomposition one = tcs::decompose(S("-2"), S("-1"));
  auto c1 = tcs::sign_classes(one);
  ASSERT_EQ(c1.size(), 2u);
  EXPECT_EQ(c1[0], (tcs::SignAssignment{1}));
  EXPECT_EQ(c1[1], (tcs::SignAssignment{-1}));

  tcs::SliceDecomposition two = tcs::decompose(S("-1/2"), S("inf"));
  auto c2 = tcs::sign_classes(two);
  ASSERT_EQ(c2.size(), 3u);
  EXPECT_EQ(c2[0], (tcs::SignAssignment{1, 1}));
  EXPECT_EQ(c2[1], (tcs::SignAssignment{1, -1}));
  EXPECT_EQ(c2[2], (tcs::SignAssignment{-1, -1}));

  tcs::SliceDecomposition five = tcs::decompose(S("-1/5"), S("inf"));
  auto c5 = tcs::sign_classes(five);
  ASSERT_EQ(c5.size(), 6u);
  for (size_t i = 0; i < 6; ++i) {
    size_t plus = 0;
    for (int v : c5[i])
      if (v > 0) ++plus;
    EXPECT_EQ(plus, 5 - i);
  }
}

TEST(RelativeEuler, SliceExample) {
  tcs::SliceDecomposition d = tcs::decompose(S("-1/2"), S("-1"));
  ASSERT_EQ(d.slice_count(), 1u);
  tcs::EulerVector plus = tcs::relative_euler(d, {1});
  EXPECT_EQ(plus.h, -1);
  EXPECT_EQ(plus.v, 0);
  tcs::EulerVector minus = tcs::relative_euler(d, {-1});
  EXPECT_EQ(minus.h, 1);
  EXPECT_EQ(minus.v, 0);
  EXPECT_THROW(tcs::relative_euler(d, {1, 1}), std::invalid_argument);
}

TEST(RelativeEuler, AllPlusIsMinusAllMinus) {
  tcs::SliceDecomposition d = tcs::decompose(S("-1/5"), S("inf"));
  tcs::SignAssignment plus(d.slice_count(), 1), minus(d.slice_count(), -1);
  tcs::EulerVector ep = tcs::relative_euler(d, plus);
  tcs::EulerVector em = tcs::relative_euler(d, minus);
  EXPECT_EQ(ep.h, -em.h);
  EXPECT_EQ(ep.v, -em.v);
}

TEST(RelativeEuler, InvariantUnderShufflesWithinBlocks) {
  tcs::SliceDecomposition d = tcs::decompose(S("-1/3"), S("inf"));
  ASSERT_EQ(d.blocks.size(), 1u);
  ASSERT_EQ(d.slice_count(), 3u);
  tcs::EulerVector a = tcs::relative_euler(d, {1, -1, -1});
  tcs::EulerVector b = tcs::relative_euler(d, {-1, 1, -1});
  tcs::EulerVector c = tcs::relative_euler(d, {-1, -1, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
}

TEST(RelativeEuler, SeparatesSignClasses) {
  // Injectivity of the class map on decompositions ending at 0.
  for (int p = -8; p <= -2; ++p)
    for (int q = 1; q <= 8 && q < -p; ++q) {
      if (std::gcd(-p, q) != 1) continue;
      tcs::SliceDecomposition d = tcs::decompose(ExtSlope(0, 1), ExtSlope(p, q));
      std::set<tcs::EulerVector> values;
      auto classes = tcs::sign_classes(d);
      for (const auto& a : classes) values.insert(tcs::relative_euler(d, a));
      EXPECT_EQ(values.size(), classes.size()) << tcs::to_string(ExtSlope(p, q));
    }
}

TEST(Disc, MatchingCountsAreCatalan) {
  EXPECT_EQ(tcs::enumerate_disc_configs(1).size(), 2u);   // 1 matching
  EXPECT_EQ(tcs::enumerate_disc_configs(2).size(), 4u);   // 2 matchings
  EXPECT_EQ(tcs::enumerate_disc_configs(4).size(), 28u);  // 14 matchings
  EXPECT_THROW(tcs::enumerate_disc_configs(0), std::invalid_argument);
}

TEST(Disc, RotationNumbers) {
  for (const auto& c : tcs::enumerate_disc_configs(1))
    EXPECT_EQ(tcs::rotation_number(c), 0);

  std::set<Int> rot2;
  for (const auto& c : tcs::enumerate_disc_configs(2))
    rot2.insert(tcs::rotation_number(c));
  EXPECT_EQ(rot2, (std::set<Int>{-1, 1}));

  // n = 3: values lie in {-2, 0, 2} and the multiset is symmetric about 0.
  std::multiset<Int> rot3;
  for (const auto& c : tcs::enumerate_disc_configs(3))
    rot3.insert(tcs::rotation_number(c));
  for (const Int& r : rot3) {
    EXPECT_TRUE(r == -2 || r == 0 || r == 2);
    EXPECT_EQ(rot3.count(r), rot3.count(-r));
  }
}

TEST(Disc, BennequinBound) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& c : tcs::enumerate_disc_configs(n)) {
      Int r = tcs::rotation_number(c);
      EXPECT_LE(Int(-n) + tcs::abs(r), -1);
      EXPECT_EQ((Int(-n) + r) % 2 != 0, true);  // tb + rot is odd
    }
}
