#include "tcs/seifert.hpp"
#include "tcs/trace.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <stdexcept>

using tcs::ExtSlope;
using tcs::Int;
using tcs::Mat2Z;

namespace {

ExtSlope S(const char* t) { return tcs::parse_slope(t); }

tcs::SeifertData sigma() {
  return tcs::make_seifert(S("1/2"), S("-1/3"), S("-2/11"), Mat2Z(2, 1, -1, 0),
                           Mat2Z(3, -1, 1, 0), Mat2Z(11, -6, 2, -1));
}

tcs::SeifertData neg_sigma() {
  return tcs::make_seifert(S("-1/2"), S("1/3"), S("2/11"), Mat2Z(2, -1, 1, 0),
                           Mat2Z(3, 1, -1, 0), Mat2Z(11, 6, -2, -1));
}

nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

TEST(MakeSeifert, AcceptsExplicitMatrices) {
  EXPECT_NO_THROW(sigma());
  EXPECT_NO_THROW(neg_sigma());
}

TEST(MakeSeifert, RejectsBadMatrices) {
  // Determinant -1.
  EXPECT_THROW(tcs::make_seifert(S("1/2"), S("-1/3"), S("-2/11"),
                                 Mat2Z(2, 1, 1, 0), Mat2Z(3, -1, 1, 0),
                                 Mat2Z(11, -6, 2, -1)),
               std::invalid_argument);
  // First column not (alpha, -beta).
  EXPECT_THROW(tcs::make_seifert(S("1/2"), S("-1/3"), S("-2/11"),
                                 Mat2Z(2, 1, -1, 0), Mat2Z(3, -1, 1, 0),
                                 Mat2Z(11, -6, 2, -1).a == 11
                                     ? Mat2Z(11, 6, -2, -1)
                                     : Mat2Z(11, -6, 2, -1)),
               std::invalid_argument);
}

TEST(MakeSeifert, CanonicalCompletion) {
  tcs::SeifertData m = tcs::make_seifert(S("1/2"), S("-1/3"), S("-2/11"));
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(m.attach[i].det(), 1);
    EXPECT_EQ(m.attach[i].a, m.invariants[i].q);
    EXPECT_EQ(m.attach[i].c, -m.invariants[i].p);
    EXPECT_LE(2 * tcs::abs(m.attach[i].b), m.invariants[i].q);
  }
}

TEST(ComplementSlope, WorkedValues) {
  EXPECT_EQ(tcs::complement_slope(sigma(), 3, 0), S("1/6"));
  EXPECT_EQ(tcs::complement_slope(sigma(), 1, -1), S("-1"));
  EXPECT_EQ(tcs::complement_slope(neg_sigma(), 1, -2), S("2/5"));
  EXPECT_THROW(tcs::complement_slope(sigma(), 4, 0), std::invalid_argument);
  EXPECT_THROW(tcs::complement_slope(sigma(), 1, 1), std::invalid_argument);
}

TEST(ComplementSlope, ClosedForms) {
  tcs::SeifertData sp = sigma(), sn = neg_sigma();
  for (Int n = -20; n <= -2; ++n) {
    EXPECT_EQ(tcs::complement_slope(sp, 1, n), ExtSlope(-n, 2 * n + 1));
    EXPECT_EQ(tcs::complement_slope(sp, 2, n), ExtSlope(n, 3 * n - 1));
    EXPECT_EQ(tcs::complement_slope(sp, 3, n), ExtSlope(2 * n - 1, 11 * n - 6));
    EXPECT_EQ(tcs::complement_slope(sn, 1, n), ExtSlope(n, 2 * n - 1));
    EXPECT_EQ(tcs::complement_slope(sn, 2, n), ExtSlope(-n, 3 * n + 1));
    EXPECT_EQ(tcs::complement_slope(sn, 3, n), ExtSlope(-(2 * n + 1), 11 * n + 6));
  }
}

TEST(ComplementSlope, NeverVertical) {
  tcs::SeifertData sp = sigma(), sn = neg_sigma();
  for (Int n = -20; n <= 0; ++n)
    for (int i = 1; i <= 3; ++i) {
      EXPECT_NE(tcs::complement_slope(sp, i, n), ExtSlope::infinity());
      EXPECT_NE(tcs::complement_slope(sn, i, n), ExtSlope::infinity());
    }
}

TEST(RoundEdges, Examples) {
  EXPECT_EQ(tcs::round_edges(4, -2, -7), S("-1/7"));
  EXPECT_EQ(tcs::round_edges(-5, 4, -11), S("2/11"));
  EXPECT_EQ(tcs::round_edges(0, 0, 1), S("-1"));
  EXPECT_THROW(tcs::round_edges(1, 1, 0), std::invalid_argument);
}

TEST(RoundEdges, ClosedFormFamilies) {
  // Tori of slopes -n1/(2n1+1) and n2/(3n2-1) over the common denominator
  // 2n1+1 = 3n2-1 round to -(1/3)(n1+1)/(2n1+1).
  for (Int n1 = -19; n1 <= -4; n1 += 3) {
    Int n2 = (2 * n1 + 2) / 3;
    ASSERT_EQ(3 * n2 - 1, 2 * n1 + 1);
    EXPECT_EQ(tcs::round_edges(-n1, n2, 2 * n1 + 1),
              ExtSlope(-(n1 + 1), 3 * (2 * n1 + 1)));
  }
  // Mirror family: slopes n1/(2n1-1) and -n2/(3n2+1) round to n2/(6n2+2).
  for (Int n1 = -20; n1 <= -2; n1 += 3) {
    Int n2 = (2 * n1 - 2) / 3;
    ASSERT_EQ(3 * n2 + 1, 2 * n1 - 1);
    EXPECT_EQ(tcs::round_edges(n1, -n2, 2 * n1 - 1), ExtSlope(n2, 6 * n2 + 2));
  }
}

TEST(TwistLemma, Examples) {
  EXPECT_TRUE(tcs::twist_lemma_applicable(S("-2"), -2));
  EXPECT_TRUE(tcs::twist_lemma_applicable(S("inf"), -1));
  EXPECT_FALSE(tcs::twist_lemma_applicable(S("1/3"), 3));
  EXPECT_THROW(tcs::twist_lemma_applicable(S("0"), 0), std::invalid_argument);
}

TEST(Imbalance, Examples) {
  EXPECT_EQ(tcs::imbalance(-7, -5), std::optional<int>(0));
  EXPECT_EQ(tcs::imbalance(-3, -3), std::nullopt);
  EXPECT_EQ(tcs::imbalance(-1, 0), std::optional<int>(0));
  EXPECT_EQ(tcs::imbalance(-5, -7), std::optional<int>(1));
  EXPECT_THROW(tcs::imbalance(1, 0), std::invalid_argument);
}

TEST(UpperBound, Products) {
  EXPECT_EQ(tcs::upper_bound_blocks(S("-1"), S("1"), S("2"), 1), 2);
  EXPECT_EQ(tcs::upper_bound_blocks(S("1/-3"), S("1/-5"), S("-1"), 1), 1);
  EXPECT_EQ(tcs::upper_bound_blocks(S("-1"), S("1"), S("2"), 0), 0);
}

TEST(Trace, InlinePassAndFail) {
  nlohmann::json script = {
      {"manifold",
       {{"invariants", {"1/2", "-1/3", "-2/11"}},
        {"matrices", {{2, 1, -1, 0}, {3, -1, 1, 0}, {11, -6, 2, -1}}}}},
      {"steps",
       {{{"op", "complement_slope"}, {"fiber", 3}, {"twist", 0}, {"expect", "1/6"}},
        {{"op", "round_edges"}, {"a", 4}, {"b", -2}, {"d", -7}, {"expect", "-1/7"}}}}};
  tcs::TraceReport ok = tcs::run_trace(script);
  EXPECT_TRUE(ok.all_pass);
  EXPECT_EQ(ok.steps.size(), 2u);

  script["steps"][1]["expect"] = "1/7";
  tcs::TraceReport bad = tcs::run_trace(script);
  EXPECT_FALSE(bad.all_pass);
  ASSERT_TRUE(bad.failed_index.has_value());
  EXPECT_EQ(*bad.failed_index, 1u);
  EXPECT_EQ(bad.steps.size(), 2u);  // fails fast at the offending step

  script["steps"][1]["op"] = "no_such_op";
  EXPECT_THROW(tcs::run_trace(script), tcs::TraceFormatError);
}

TEST(Trace, EmptyScriptPasses) {
  nlohmann::json script = {
      {"manifold", {{"invariants", {"1/2", "-1/3", "-2/11"}}}},
      {"steps", nlohmann::json::array()}};
  tcs::TraceReport r = tcs::run_trace(script);
  EXPECT_TRUE(r.all_pass);
  EXPECT_TRUE(r.steps.empty());
}

TEST(Trace, Deterministic) {
  nlohmann::json script = load("sigma_2_3_11.json");
  tcs::TraceReport a = tcs::run_trace(script);
  tcs::TraceReport b = tcs::run_trace(script);
  EXPECT_EQ(tcs::report_to_json(a), tcs::report_to_json(b));
}

TEST(Trace, BundledFixturesPass) {
  EXPECT_TRUE(tcs::run_trace(load("sigma_2_3_11.json")).all_pass);
  EXPECT_TRUE(tcs::run_trace(load("neg_sigma_2_3_11.json")).all_pass);
}
