#include <gtest/gtest.h>

#include <algorithm>

#include "verify/criteria.hpp"
#include "verify/oracles.hpp"

namespace qapblock::verify {
namespace {

TEST(Oracles, AntiMongeExhaustive) {
  EXPECT_TRUE(anti_monge_exhaustive(SymMatrix({{2, 1, 1}, {1, 0, 0}, {1, 0, 0}})));
  EXPECT_FALSE(anti_monge_exhaustive(SymMatrix({{0, 1}, {1, 0}})));
  EXPECT_FALSE(anti_monge_exhaustive(SymMatrix(std::vector<std::vector<Rational>>{{-1}})));
}

TEST(Oracles, SubsetsSummingToOne) {
  const auto subsets = subsets_summing_to_one({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(subsets.size(), 6u);
  EXPECT_TRUE(subsets_summing_to_one({Rational(6, 5), Rational(2, 5), Rational(1, 5), Rational(1, 5)}).empty());
  EXPECT_TRUE(subsets_summing_to_one({2}).empty());
}

TEST(Oracles, MinBisectionCut) {
  EXPECT_EQ(min_bisection_cut(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2u);
  EXPECT_EQ(min_bisection_cut(4, {}), 0u);
  EXPECT_EQ(min_bisection_cut(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 4u);
}

TEST(Oracles, TwoBlockGridMinimum) {
  EXPECT_EQ(two_block_grid_minimum(0, 0, 0, 0), 0);
  EXPECT_EQ(two_block_grid_minimum(1, 1, 1, 1), 0);
  EXPECT_EQ(two_block_grid_minimum(0, 1, 1, 1), 2);
  EXPECT_EQ(two_block_grid_minimum(1, 2, 3, 6), 0);
}

TEST(Oracles, AllPermutationValues) {
  const SymMatrix a({{2, 1, 1}, {1, 0, 0}, {1, 0, 0}});
  const SymMatrix b({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}});
  const auto values = all_permutation_values(a, b);
  ASSERT_EQ(values.size(), 6u);
  EXPECT_EQ(values.front(), 4);
  EXPECT_EQ(*std::min_element(values.begin(), values.end()), 2);
}

TEST(Criteria, SmallRunPasses) {
  VerifyConfig config;
  config.max_n = 6;
  config.two_block_max = 6;
  config.sample_scale = 0.2;
  for (const auto& r : run_criteria({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, config)) {
    EXPECT_TRUE(r.passed()) << format_result(r);
    EXPECT_EQ(format_result(r).rfind("PASS", 0), 0u);
  }
}

TEST(Criteria, Deterministic) {
  VerifyConfig config;
  config.sample_scale = 0.1;
  EXPECT_EQ(run_criterion(9, config).checks, run_criterion(9, config).checks);
}

TEST(Criteria, RejectsUnknownIds) {
  EXPECT_THROW(run_criteria({0}, VerifyConfig{}), std::invalid_argument);
  EXPECT_THROW(run_criteria({11}, VerifyConfig{}), std::invalid_argument);
}

TEST(Criteria, FailureFormatting) {
  CriterionResult r;
  r.id = 4;
  r.title = "demo";
  r.checks = 3;
  r.failures = 1;
  r.first_failure = "n=2";
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(format_result(r).rfind("FAIL", 0), 0u);
  EXPECT_NE(format_result(r).find("n=2"), std::string::npos);
  EXPECT_FALSE(CriterionResult{}.passed());
}

}  // namespace
}  // namespace qapblock::verify
