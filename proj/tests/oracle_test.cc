// Copyright 2026 The weakrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weakrank/oracle.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "test_oracles.h"

namespace weakrank {
namespace {

std::vector<std::vector<Ranking::Group>> Collect(int n) {
  std::vector<std::vector<Ranking::Group>> out;
  for (const Ranking& r : EnumerateWeakOrders(n)) out.push_back(r.groups());
  return out;
}

TEST(EnumerateWeakOrdersTest, CountsMatchOrderedBellRecurrence) {
  const auto bell = testing::OrderedBellNumbers(8);
  EXPECT_EQ(bell[1], 1u);
  EXPECT_EQ(bell[3], 13u);
  EXPECT_EQ(bell[4], 75u);
  EXPECT_EQ(bell[5], 541u);
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(Collect(n).size(), bell[n]) << "n=" << n;
}

TEST(EnumerateWeakOrdersTest, TwoAlternativesInOrder) {
  EXPECT_EQ(Collect(2), (std::vector<std::vector<Ranking::Group>>{
                            {{0}, {1}},
                            {{0, 1}},
                            {{1}, {0}},
                        }));
  EXPECT_EQ(Collect(1), (std::vector<std::vector<Ranking::Group>>{{{0}}}));
}

TEST(EnumerateWeakOrdersTest, SameSetAsLevelBruteForceAndSortedWithoutRepeats) {
  for (int n = 1; n <= 5; ++n) {
    const auto listed = Collect(n);
    std::set<std::vector<Ranking::Group>> reference;
    for (const auto& l : testing::AllWeakOrdersByLevels(n)) reference.insert(testing::GroupsOf(l));
    const std::set<std::vector<Ranking::Group>> seen(listed.begin(), listed.end());
    EXPECT_EQ(seen.size(), listed.size());
    EXPECT_EQ(seen, reference);
    // std::set orders by the same lexicographic group comparison.
    EXPECT_TRUE(std::equal(listed.begin(), listed.end(), reference.begin()));
  }
}

TEST(EnumerateWeakOrdersTest, SizeGuard) {
  EXPECT_THROW(EnumerateWeakOrders(0), std::out_of_range);
  EXPECT_THROW(EnumerateWeakOrders(9), std::out_of_range);
  EXPECT_NO_THROW(EnumerateWeakOrders(9, {.allow_large = true}));
  EXPECT_THROW(EnumerateWeakOrders(kMaxEnumerationSize + 1, {.allow_large = true}), std::out_of_range);
}

TEST(EnumerateWeakOrdersTest, LargeSizesStartWithTheStrictChain) {
  const auto all = EnumerateWeakOrders(12, {.allow_large = true});
  auto it = all.begin();
  EXPECT_EQ(GroupCount(*it), 12u);
  ++it;
  EXPECT_EQ(it->groups().back(), (Ranking::Group{10, 11}));
}

TEST(CheckBijectionTest, SmallSizes) {
  EXPECT_EQ(CheckBijection(1), (BijectionReport{1, 1, 1, 1, 0}));
  EXPECT_EQ(CheckBijection(4), (BijectionReport{4, 75, 75, 75, 0}));
  EXPECT_EQ(CheckBijection(5), (BijectionReport{5, 541, 541, 541, 0}));
  EXPECT_TRUE(CheckBijection(6).ok());
}

TEST(CheckLawsTest, HoldForFixture) {
  EXPECT_TRUE(CheckLaws(Ranking({{0}, {1, 2}, {3}})).empty());
  EXPECT_TRUE(CheckLaws(Ranking({{2}, {0, 1}}, Roster({"a", "b", "c"}))).empty());
}

TEST(BijectionReportTest, OkRequiresDistinctImagesAndNoFailures) {
  EXPECT_TRUE((BijectionReport{4, 75, 75, 75, 0}).ok());
  EXPECT_FALSE((BijectionReport{4, 75, 74, 75, 0}).ok());
  EXPECT_FALSE((BijectionReport{4, 75, 75, 74, 0}).ok());
  EXPECT_FALSE((BijectionReport{4, 75, 75, 75, 1}).ok());
}

}  // namespace
}  // namespace weakrank
