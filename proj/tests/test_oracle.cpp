#include <gtest/gtest.h>

#include "dwmds/local_part.hpp"
#include "dwmds/oracle.hpp"
#include "oracles.hpp"

using namespace dwmds;

TEST(Kubota, SmallCases) {
  for (int n = 1; n <= 5; ++n) {
    LocalPart expected(1, n, {0});
    expected.accumulate({0}, RingElem::one(n));
    expected.accumulate({1}, gauss_symbol(1, n));
    EXPECT_EQ(kubota_local(0, n), expected);
  }
  LocalPart l1(1, 2, {1});
  l1.accumulate({0}, RingElem::one(2));
  l1.accumulate({2}, -pow_p(2, 1));
  EXPECT_EQ(kubota_local(1, 2), l1);

  LocalPart l2(1, 2, {2});
  l2.accumulate({0}, RingElem::one(2));
  l2.accumulate({2}, pow_p(2, 2) - pow_p(2, 1));
  l2.accumulate({3}, gauss_symbol(1, 2) * pow_p(2, 2));
  EXPECT_EQ(kubota_local(2, 2), l2);
}

TEST(Kubota, MatchesBruteForceSummation) {
  for (int l = 0; l <= 10; ++l) {
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(kubota_local(l, n), oracle::rank1_brute_force(l, n)) << l << " " << n;
  }
}

TEST(Kubota, RejectsNegativeTwist) { EXPECT_THROW(kubota_local(-1, 2), std::invalid_argument); }

TEST(TwistGrid, LexicographicAndComplete) {
  const auto grid = twist_grid(2, 1);
  EXPECT_EQ(grid, (std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(twist_grid(4, 2).size(), 81u);
}

TEST(Suites, Pass) {
  EXPECT_TRUE(check_example2().ok());
  EXPECT_TRUE(check_tokuyama(2).ok());
  EXPECT_TRUE(check_tokuyama(3).ok());
  EXPECT_TRUE(check_dimension(3, 1).ok());
  EXPECT_TRUE(check_rank2(1, 2).ok());
  EXPECT_TRUE(check_normalization({{3, {0, 1, 0}}}, 3).ok());
}

TEST(Suites, ExpectedRankTwoFactorisationForUnequalTwist) {
  // x_1 carries the twist of node 2; swapping the pair must break the check.
  const LocalPart computed = compute_local_part(RootSystemD(2), HighestWeight::from_twist({1, 2}), 2);
  LocalPart swapped = outer_product(kubota_local(1, 2), kubota_local(2, 2));
  swapped.twist = {1, 2};
  EXPECT_NE(computed, swapped);
  // Degree in x_1 is l_2 + 1.
  int max_x1 = 0;
  for (const auto& [lambda, c] : computed.coefficients) max_x1 = std::max(max_x1, lambda[0]);
  EXPECT_EQ(max_x1, 3);
}

TEST(Report, JsonAndTable) {
  VerificationReport report{"demo", {}};
  report.add("a", "1", "1");
  report.add("b", "2", "3");
  EXPECT_EQ(report.passed(), 1u);
  EXPECT_EQ(report.failed(), 1u);
  EXPECT_FALSE(report.ok());
  const auto j = report.to_json();
  EXPECT_EQ(j["summary"]["total"], 2);
  EXPECT_EQ(j["cases"][1]["pass"], false);
  const std::string table = report.to_table();
  EXPECT_NE(table.find("FAIL  b"), std::string::npos);
  EXPECT_NE(table.find("expected 2 | actual 3"), std::string::npos);
  EXPECT_NE(table.find("1/2 passed"), std::string::npos);
}
