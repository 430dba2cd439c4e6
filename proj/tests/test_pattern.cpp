#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dwmds/pattern.hpp"
#include "dwmds/root_data.hpp"
#include "oracles.hpp"

using namespace dwmds;

namespace {

std::vector<LittelmannPattern> all_patterns(int rank, const std::vector<int>& twist,
                                            std::optional<WeightVector> filter = std::nullopt) {
  return enumerate_patterns(RootSystemD(rank), HighestWeight::from_twist(twist), filter);
}

}  // namespace

TEST(PatternShape, RowsShrinkByTwo) {
  const LittelmannPattern t(4);
  EXPECT_EQ(t.num_rows(), 3);
  EXPECT_EQ(t.row(1).size(), 6u);
  EXPECT_EQ(t.row(2).size(), 4u);
  EXPECT_EQ(t.row(3).size(), 2u);
  EXPECT_EQ(t.entries().size(), 12u);
  EXPECT_TRUE(t.contains({3, 3}));
  EXPECT_FALSE(t.contains({3, 2}));
  EXPECT_FALSE(t.contains({2, 7}));
}

TEST(PatternShape, BarMirrorsColumns) {
  const auto t = LittelmannPattern::parse("1,2,3,4,5,6;7,8,9,10;11,12");
  EXPECT_EQ(t.bar(1, 1), 6);
  EXPECT_EQ(t.bar(1, 3), 4);
  EXPECT_EQ(t.bar(2, 2), 10);
  EXPECT_EQ(t.bar(3, 4), 11);
  EXPECT_EQ(t.at({2, 4}), 9);
}

TEST(PatternLiteral, RoundTrips) {
  const std::string text = "9,6,5,5,4,1;5,3,3,2;2,2";
  const auto t = LittelmannPattern::parse(text);
  EXPECT_EQ(t.rank(), 4);
  EXPECT_EQ(t.to_string(), text);
  EXPECT_EQ(LittelmannPattern::parse(" 9, 6,5,5,4,1 ; 5,3,3,2;2,2"), t);
  EXPECT_EQ(LittelmannPattern::from_json(t.to_json()), t);
}

TEST(PatternLiteral, RejectsMalformedInput) {
  EXPECT_THROW(LittelmannPattern::parse(""), std::invalid_argument);
  EXPECT_THROW(LittelmannPattern::parse("1,2,x"), std::invalid_argument);
  EXPECT_THROW(LittelmannPattern::parse("1,2,3;1,2"), std::invalid_argument);
  EXPECT_THROW(LittelmannPattern::parse("1,-2"), std::invalid_argument);
  EXPECT_THROW(LittelmannPattern::parse("1,2;"), std::invalid_argument);
}

TEST(ThetaAdmissible, RankTwoAtBoundsIsCriticalTwice) {
  const auto hw = HighestWeight::from_twist({2, 4});  // m = (3, 5)
  const auto t = LittelmannPattern::from_rows(2, {{5, 3}});
  EXPECT_TRUE(is_theta_admissible(t, hw));
  EXPECT_EQ(critical_positions(t, hw), (std::vector<Position>{{1, 1}, {1, 2}}));
}

TEST(ThetaAdmissible, ZeroPatternHasNoCriticalEntries) {
  const auto hw = HighestWeight::from_twist({0, 0, 0, 0});
  const LittelmannPattern t(4);
  EXPECT_TRUE(is_theta_admissible(t, hw));
  EXPECT_TRUE(critical_positions(t, hw).empty());
  for (const Position& p : t.positions()) EXPECT_GE(upper_bound(t, hw, p), 1) << p.to_string();
}

TEST(ThetaAdmissible, RankTwoOverBoundIsRejected) {
  const auto hw = HighestWeight::from_twist({2, 4});
  const auto t = LittelmannPattern::from_rows(2, {{6, 0}});
  EXPECT_FALSE(is_theta_admissible(t, hw));
  const auto v = first_violation(t, hw);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->position, (Position{1, 1}));
  EXPECT_EQ(v->bound, 5);
  EXPECT_FALSE(v->chain);
  EXPECT_NE(v->describe().find("(1,1)"), std::string::npos);
}

TEST(ThetaAdmissible, ChainViolationIsReported) {
  const auto hw = HighestWeight::from_twist({5, 5, 5});
  const auto t = LittelmannPattern::from_rows(3, {{0, 1, 0, 0}, {0, 0}});
  EXPECT_FALSE(is_admissible(t));
  const auto v = first_violation(t, hw);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->chain);
}

TEST(ThetaAdmissible, RowOneBoundsFollowRightHalf) {
  const auto hw = HighestWeight::from_m({2, 3, 5, 7});
  const auto t = LittelmannPattern::parse("0,0,0,0,4,1;0,0,0,0;0,0");
  EXPECT_EQ(upper_bound(t, hw, {1, 6}), 7);      // m_4
  EXPECT_EQ(upper_bound(t, hw, {1, 5}), 5 + 1);  // m_3 plus the entry to its right
  EXPECT_EQ(upper_bound(t, hw, {1, 3}), 3 + 4);  // m_2 plus the mirror of column 2
  EXPECT_EQ(upper_bound(t, hw, {1, 4}), 2 + 4);  // m_1 plus the mirror of column 2
}

TEST(WeightVector, Examples) {
  EXPECT_EQ(weight_vector(LittelmannPattern(5)), WeightVector(5, 0));
  EXPECT_EQ(weight_vector(LittelmannPattern::from_rows(2, {{4, 7}})), (WeightVector{4, 7}));
  LittelmannPattern t(6);
  for (int j = 1; j <= 10; ++j) t.set({1, j}, 3);
  EXPECT_EQ(weight_vector(t), (WeightVector{3, 3, 6, 6, 6, 6}));
}

TEST(WeightVector, ColumnIndexMap) {
  // D_4, row 1: columns 1..6 feed lambda_4, lambda_3, lambda_1, lambda_2, lambda_3, lambda_4.
  const std::vector<int> expected{4, 3, 1, 2, 3, 4};
  for (int col = 1; col <= 6; ++col) EXPECT_EQ(weight_index_of_column(4, col), expected[col - 1]);
}

TEST(Enumerator, KnownCounts) {
  EXPECT_EQ(PatternEnumerator(RootSystemD(4), HighestWeight::from_m({1, 1, 1, 1})).count(), 4096u);
  EXPECT_EQ(all_patterns(4, {0, 0, 0, 0}).size(), 4096u);
  EXPECT_EQ(all_patterns(4, {0, 1, 2, 0}, WeightVector{10, 10, 17, 10}).size(), 27u);
}

TEST(Enumerator, RankTwoIsAProductOfRanges) {
  for (int m1 = 1; m1 <= 4; ++m1) {
    for (int m2 = 1; m2 <= 4; ++m2) {
      const auto hw = HighestWeight::from_m({m1, m2});
      EXPECT_EQ(PatternEnumerator(RootSystemD(2), hw).count(), static_cast<std::uint64_t>((m1 + 1) * (m2 + 1)));
    }
  }
}

TEST(Enumerator, CountMatchesIndependentDimensionFormula) {
  for (int r = 2; r <= 4; ++r) {
    for (const auto& tw : std::vector<std::vector<int>>{std::vector<int>(r, 0), std::vector<int>(r, 1)}) {
      std::vector<int> m(tw);
      for (int& v : m) ++v;
      const auto hw = HighestWeight::from_twist(tw);
      EXPECT_EQ(BigInt(PatternEnumerator(RootSystemD(r), hw).count()), oracle::weyl_dimension(m)) << "r=" << r;
    }
  }
}

TEST(Enumerator, AgreesWithBoxFilter) {
  for (int r : {2, 3}) {
    for (const auto& tw : std::vector<std::vector<int>>{std::vector<int>(r, 0), {1, 0, 1}, {0, 2, 1}}) {
      if (static_cast<int>(tw.size()) != r) continue;
      const auto hw = HighestWeight::from_twist(tw);
      const auto listed = enumerate_patterns(RootSystemD(r), hw);
      int cap = 0;
      for (const auto& t : listed) {
        for (int v : t.entries()) cap = std::max(cap, v);
      }
      ++cap;  // one past the largest value ever produced
      std::vector<LittelmannPattern> filtered;
      oracle::for_each_box_pattern(r, cap, [&](const LittelmannPattern& t) {
        if (is_theta_admissible(t, hw)) filtered.push_back(t);
      });
      std::sort(filtered.begin(), filtered.end());
      EXPECT_EQ(listed, filtered) << "r=" << r;
    }
  }
}

TEST(Enumerator, CanonicalOrderIsStrictlyIncreasing) {
  const auto listed = all_patterns(4, {1, 0, 1, 0});
  EXPECT_TRUE(std::is_sorted(listed.begin(), listed.end()));
  EXPECT_EQ(std::adjacent_find(listed.begin(), listed.end()), listed.end());
}

TEST(Enumerator, WeightClassesPartitionTheFullSet) {
  const auto hw = HighestWeight::from_twist({1, 0, 1});
  const RootSystemD rs(3);
  const auto full = enumerate_patterns(rs, hw);
  std::set<WeightVector> weights;
  for (const auto& t : full) weights.insert(weight_vector(t));
  std::vector<LittelmannPattern> united;
  for (const auto& w : weights) {
    for (const auto& t : enumerate_patterns(rs, hw, w)) {
      EXPECT_EQ(weight_vector(t), w);
      united.push_back(t);
    }
  }
  std::sort(united.begin(), united.end());
  EXPECT_EQ(united, full);
  EXPECT_TRUE(enumerate_patterns(rs, hw, WeightVector{100, 0, 0}).empty());
}

TEST(Enumerator, BoundsAreMonotoneInHighestWeight) {
  const RootSystemD rs(3);
  const std::vector<int> base{1, 2, 1};
  const auto small = enumerate_patterns(rs, HighestWeight::from_m(base));
  for (int k = 0; k < 3; ++k) {
    auto m = base;
    ++m[k];
    const auto big = enumerate_patterns(rs, HighestWeight::from_m(m));
    EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end())) << "k=" << k;
  }
}

TEST(Enumerator, WorkUnitsCoverEverythingInAnyOrder) {
  const RootSystemD rs(4);
  const auto hw = HighestWeight::from_twist({0, 1, 0, 1});
  const PatternEnumerator e(rs, hw);
  std::vector<LittelmannPattern> sequential;
  e.enumerate([&](const LittelmannPattern& t) { sequential.push_back(t); });

  std::vector<LittelmannPattern> reversed;
  std::uint64_t counted = 0;
  for (std::size_t u = e.work_units().size(); u-- > 0;) {
    e.enumerate_unit(u, [&](const LittelmannPattern& t) { reversed.push_back(t); });
    counted += e.count_unit(u);
  }
  std::sort(reversed.begin(), reversed.end());
  EXPECT_EQ(reversed, sequential);
  EXPECT_EQ(counted, sequential.size());
  EXPECT_EQ(e.count(), sequential.size());
}

TEST(Enumerator, FilteredCountMatchesFilteredListing) {
  const RootSystemD rs(4);
  const auto hw = HighestWeight::from_twist({0, 1, 2, 0});
  const PatternEnumerator e(rs, hw, WeightVector{10, 10, 17, 10});
  EXPECT_EQ(e.count(), 27u);
}
