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

#include "weakrank/validate.h"

#include <algorithm>
#include <set>

#include "gtest/gtest.h"
#include "test_oracles.h"
#include "weakrank/convert.h"
#include "weakrank/core.h"

namespace weakrank {
namespace {

using Sets = std::vector<std::vector<std::int64_t>>;

Position P(const char* text) { return Position::Parse(text); }

std::vector<ViolationCode> Codes(const ValidationReport& report) {
  std::vector<ViolationCode> codes;
  for (const auto& v : report.violations) codes.push_back(v.code);
  return codes;
}

TEST(ValidatePmTest, AcceptsWorkedExamples) {
  EXPECT_TRUE(ValidatePm(Sets{{1}, {2, 3}, {2, 3}, {4}}).valid());
  EXPECT_TRUE(ValidatePm(Sets{{1, 2}, {1, 2}, {3}, {4}}).valid());
  EXPECT_TRUE(ValidatePm(Sets{{1}}).valid());
}

TEST(ValidatePmTest, GapAndSharedSingleton) {
  const auto report = ValidatePm(Sets{{1, 3}, {2}, {2}, {4}});
  ASSERT_EQ(report.violations.size(), 2u);
  EXPECT_TRUE(report.Has(ViolationCode::kPmNotConsecutive, {0}));
  EXPECT_TRUE(report.Has(ViolationCode::kPmMultiplicityMismatch, {1, 2}));
}

TEST(ValidatePmTest, OverlappingUnequalBlocks) {
  const auto report = ValidatePm(Sets{{1, 2}, {1, 2}, {2, 3}, {4}});
  EXPECT_TRUE(report.Has(ViolationCode::kPmOverlapNotEqual, {1, 2}));
  EXPECT_TRUE(report.Has(ViolationCode::kPmOverlapNotEqual, {0, 2}));
  for (const auto code : Codes(report)) EXPECT_EQ(code, ViolationCode::kPmOverlapNotEqual);
}

TEST(ValidatePmTest, ShapeErrors) {
  EXPECT_TRUE(ValidatePm(Sets{{1}, {}}).Has(ViolationCode::kPmEmptyEntry, {1}));
  EXPECT_TRUE(ValidatePm(Sets{{0}, {2}}).Has(ViolationCode::kPmOutOfRange, {0}));
  EXPECT_TRUE(ValidatePm(Sets{{1}, {3}}).Has(ViolationCode::kPmOutOfRange, {1}));
  EXPECT_TRUE(ValidatePm(Sets{{1}, {3}}).Has(ViolationCode::kPmNotPartition));
  EXPECT_TRUE(ValidatePm(Sets{}).Has(ViolationCode::kSizeMismatch));
  EXPECT_TRUE(ValidatePm(Sets{{1}, {2}}, 3).Has(ViolationCode::kSizeMismatch));
}

TEST(ValidatePmTest, UncoveredPositionsAreNotAPartition) {
  const auto report = ValidatePm(Sets{{1, 2}, {1, 2}, {4}, {4}});
  EXPECT_TRUE(report.Has(ViolationCode::kPmMultiplicityMismatch, {2, 3}));
  EXPECT_TRUE(report.Has(ViolationCode::kPmNotPartition, {}));
}

TEST(ValidatePmTest, EntriesAreSets) {
  EXPECT_TRUE(ValidatePm(Sets{{1}, {3, 2}, {2, 3, 3}, {4}}).valid());
}

TEST(ValidatePmTest, CapsViolations) {
  const Sets bad(100, std::vector<std::int64_t>{0});
  const auto report = ValidatePm(bad);
  EXPECT_EQ(report.violations.size(), kMaxViolations);
  EXPECT_TRUE(report.truncated);
  EXPECT_FALSE(report.valid());
}

TEST(ValidatePmTest, Deterministic) {
  const Sets input{{2, 4}, {1, 2}, {1}, {9}, {}};
  EXPECT_EQ(ValidatePm(input), ValidatePm(input));
}

TEST(ValidateCsTest, AcceptsWorkedExamples) {
  EXPECT_TRUE(ValidateCs(std::vector<Position>{P("1"), P("2.5"), P("2.5"), P("4")}).valid());
  EXPECT_TRUE(ValidateCs(std::vector<Position>{P("1.5"), P("1.5"), P("3"), P("4")}).valid());
}

TEST(ValidateCsTest, MisalignedPair) {
  const auto report = ValidateCs(std::vector<Position>{P("1"), P("2"), P("2"), P("4")});
  EXPECT_TRUE(report.Has(ViolationCode::kCsGroupAlignment, {1, 2}));
  EXPECT_TRUE(report.Has(ViolationCode::kCsIntervalsDontTile));
  // Absent from the images of all 75 weak orders on four alternatives.
  std::set<std::vector<std::int64_t>> images;
  for (const auto& l : testing::AllWeakOrdersByLevels(4)) images.insert(testing::ReferenceDoubledCs(l));
  EXPECT_EQ(images.count({2, 4, 4, 8}), 0u);
}

TEST(ValidateCsTest, StartBelowOne) {
  const auto report = ValidateCs(std::vector<Position>{P("1"), P("1"), P("1")});
  EXPECT_TRUE(report.Has(ViolationCode::kCsGroupAlignment, {0, 1, 2}));
}

TEST(ValidateCsTest, RangeAndTiling) {
  EXPECT_TRUE(ValidateCs(std::vector<Position>{P("0.5"), P("2")}).Has(ViolationCode::kCsOutOfRange, {0}));
  EXPECT_TRUE(ValidateCs(std::vector<Position>{P("1"), P("5")}).Has(ViolationCode::kCsOutOfRange, {1}));
  // Runs [1, 2] and [2, 2] overlap.
  const auto overlap = ValidateCs(std::vector<Position>{P("1.5"), P("1.5"), P("2")});
  EXPECT_TRUE(overlap.Has(ViolationCode::kCsIntervalsDontTile, {0, 1, 2}));
  EXPECT_FALSE(overlap.Has(ViolationCode::kCsGroupAlignment));
  // Run [2, 4] overflows n = 3.
  EXPECT_TRUE(ValidateCs(std::vector<Position>{P("3"), P("3"), P("3")})
                  .Has(ViolationCode::kCsIntervalsDontTile, {0, 1, 2}));
  EXPECT_TRUE(ValidateCs(std::vector<Position>{}).Has(ViolationCode::kSizeMismatch));
  EXPECT_TRUE(ValidateCs(std::vector<Position>{P("1")}, 2).Has(ViolationCode::kSizeMismatch));
}

TEST(ValidationCodeTest, NamesRoundTrip) {
  for (int c = 0; c <= static_cast<int>(ViolationCode::kSizeMismatch); ++c) {
    const auto code = static_cast<ViolationCode>(c);
    EXPECT_EQ(ViolationCodeFromName(ViolationCodeName(code)), code);
  }
  EXPECT_EQ(ViolationCodeName(ViolationCode::kCsGroupAlignment), "CS_GROUP_ALIGNMENT");
  EXPECT_EQ(ViolationCodeFromName("NOPE"), std::nullopt);
}

// Every length-n vector whose entries are runs [a, b] inside [1, n]: the
// validator must accept exactly the brute-force images.
TEST(ValidatePmTest, AcceptsExactlyTheImagesAmongAllRunVectors) {
  for (int n = 1; n <= 4; ++n) {
    std::set<Sets> images;
    for (const auto& l : testing::AllWeakOrdersByLevels(n)) images.insert(testing::ReferencePm(l));
    std::vector<std::vector<std::int64_t>> runs;
    for (int a = 1; a <= n; ++a) {
      for (int b = a; b <= n; ++b) {
        std::vector<std::int64_t> run;
        for (int p = a; p <= b; ++p) run.push_back(p);
        runs.push_back(run);
      }
    }
    std::vector<std::size_t> pick(n, 0);
    std::size_t accepted = 0;
    for (;;) {
      Sets candidate;
      for (const std::size_t k : pick) candidate.push_back(runs[k]);
      const bool valid = ValidatePm(candidate).valid();
      ASSERT_EQ(valid, images.count(candidate) == 1) << "n=" << n;
      accepted += valid;
      std::size_t pos = 0;
      while (pos < pick.size() && ++pick[pos] == runs.size()) pick[pos++] = 0;
      if (pos == pick.size()) break;
    }
    EXPECT_EQ(accepted, images.size());
  }
}

// For n = 3, every vector of arbitrary subsets of {0, ..., 4}.
TEST(ValidatePmTest, AcceptsExactlyTheImagesAmongAllSubsetVectors) {
  constexpr int n = 3;
  std::set<Sets> images;
  for (const auto& l : testing::AllWeakOrdersByLevels(n)) images.insert(testing::ReferencePm(l));
  std::size_t accepted = 0;
  for (int code = 0; code < (1 << 15); ++code) {
    Sets candidate(n);
    for (int i = 0; i < n; ++i) {
      for (int p = 0; p < 5; ++p) {
        if (code >> (5 * i + p) & 1) candidate[i].push_back(p);
      }
    }
    const bool valid = ValidatePm(candidate).valid();
    ASSERT_EQ(valid, images.count(candidate) == 1);
    accepted += valid;
  }
  EXPECT_EQ(accepted, 13u);
}

TEST(ValidateCsTest, AcceptsExactlyTheImagesAmongHalfIntegerGrids) {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<std::int64_t>> images;
    for (const auto& l : testing::AllWeakOrdersByLevels(n)) images.insert(testing::ReferenceDoubledCs(l));
    // Doubled values 1..2n+1 cover 0.5..n+0.5, one step past each end.
    const int choices = 2 * n + 1;
    std::vector<std::int64_t> doubled(n, 1);
    std::size_t accepted = 0;
    for (;;) {
      std::vector<Position> candidate;
      for (const auto d : doubled) candidate.push_back(Position::FromDoubled(d));
      const auto report = ValidateCs(candidate);
      ASSERT_EQ(report.valid(), images.count(doubled) == 1) << "n=" << n;
      if (report.valid()) {
        ++accepted;
        const auto pm = CsToPm(CookSeifordVector::Create(candidate));
        ASSERT_TRUE(ValidatePm(pm.ToSets()).valid());
      }
      int pos = 0;
      while (pos < n && ++doubled[pos] > choices) doubled[pos++] = 1;
      if (pos == n) break;
    }
    EXPECT_EQ(accepted, images.size());
  }
}

// Targeted corruptions of every valid preference map on four alternatives.
class PmMutationTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (const auto& l : testing::AllWeakOrdersByLevels(4)) maps_.push_back(testing::ReferencePm(l));
  }
  std::vector<Sets> maps_;
};

TEST_F(PmMutationTest, DroppingAnEndOfASharedBlockOverlaps) {
  for (const Sets& pm : maps_) {
    for (std::size_t i = 0; i < pm.size(); ++i) {
      if (pm[i].size() < 2) continue;
      Sets bad = pm;
      bad[i].pop_back();
      const auto report = ValidatePm(bad);
      ASSERT_FALSE(report.valid());
      for (std::size_t j = 0; j < pm.size(); ++j) {
        if (j != i && pm[j] == pm[i]) {
          ASSERT_TRUE(report.Has(ViolationCode::kPmOverlapNotEqual, {std::min(i, j), std::max(i, j)}));
        }
      }
    }
  }
}

TEST_F(PmMutationTest, DroppingAMiddleElementLeavesAGap) {
  std::size_t tried = 0;
  for (const Sets& pm : maps_) {
    for (std::size_t i = 0; i < pm.size(); ++i) {
      if (pm[i].size() < 3) continue;
      Sets bad = pm;
      bad[i].erase(bad[i].begin() + 1);
      ASSERT_TRUE(ValidatePm(bad).Has(ViolationCode::kPmNotConsecutive, {i}));
      ++tried;
    }
  }
  EXPECT_GT(tried, 0u);
}

TEST_F(PmMutationTest, ShiftingABlockPastAnEndLeavesTheRange) {
  for (const Sets& pm : maps_) {
    for (const std::int64_t delta : {-1, 1}) {
      const std::int64_t edge = delta < 0 ? 1 : 4;
      Sets bad = pm;
      std::vector<std::size_t> moved;
      for (std::size_t i = 0; i < pm.size(); ++i) {
        if (std::find(pm[i].begin(), pm[i].end(), edge) == pm[i].end()) continue;
        for (auto& p : bad[i]) p += delta;
        moved.push_back(i);
      }
      const auto report = ValidatePm(bad);
      for (const std::size_t i : moved) ASSERT_TRUE(report.Has(ViolationCode::kPmOutOfRange, {i}));
    }
  }
}

TEST_F(PmMutationTest, ShiftingAnInnerBlockCollidesWithItsSuccessor) {
  for (const Sets& pm : maps_) {
    for (std::size_t i = 0; i < pm.size(); ++i) {
      if (pm[i].back() == 4) continue;
      std::size_t next = 0;
      while (pm[next].front() != pm[i].back() + 1) ++next;
      Sets bad = pm;
      for (std::size_t k = 0; k < pm.size(); ++k) {
        if (pm[k] == pm[i]) {
          for (auto& p : bad[k]) p += 1;
        }
      }
      const auto report = ValidatePm(bad);
      ASSERT_FALSE(report.valid());
      if (pm[i].size() == 1 && pm[next].size() == 1) {
        ASSERT_TRUE(report.Has(ViolationCode::kPmMultiplicityMismatch, {std::min(i, next), std::max(i, next)}));
      } else {
        ASSERT_TRUE(report.Has(ViolationCode::kPmOverlapNotEqual));
      }
    }
  }
}

TEST_F(PmMutationTest, MergingUnequalBlocksIntoOneEntry) {
  for (const Sets& pm : maps_) {
    for (std::size_t i = 0; i < pm.size(); ++i) {
      for (std::size_t j = 0; j < pm.size(); ++j) {
        if (pm[i] == pm[j]) continue;
        Sets bad = pm;
        bad[i].insert(bad[i].end(), pm[j].begin(), pm[j].end());
        std::sort(bad[i].begin(), bad[i].end());
        const auto report = ValidatePm(bad);
        const bool adjacent = bad[i].back() - bad[i].front() + 1 == static_cast<std::int64_t>(bad[i].size());
        if (adjacent) {
          ASSERT_TRUE(report.Has(ViolationCode::kPmOverlapNotEqual, {std::min(i, j), std::max(i, j)}));
        } else {
          ASSERT_TRUE(report.Has(ViolationCode::kPmNotConsecutive, {i}));
        }
      }
    }
  }
}

}  // namespace
}  // namespace weakrank
