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
#include <array>
#include <map>
#include <sstream>
#include <utility>

namespace weakrank {
namespace {

constexpr std::array<std::pair<ViolationCode, std::string_view>, 11> kCodeNames = {{
    {ViolationCode::kPmEmptyEntry, "PM_EMPTY_ENTRY"},
    {ViolationCode::kPmNotConsecutive, "PM_NOT_CONSECUTIVE"},
    {ViolationCode::kPmOutOfRange, "PM_OUT_OF_RANGE"},
    {ViolationCode::kPmOverlapNotEqual, "PM_OVERLAP_NOT_EQUAL"},
    {ViolationCode::kPmNotPartition, "PM_NOT_PARTITION"},
    {ViolationCode::kPmMultiplicityMismatch, "PM_MULTIPLICITY_MISMATCH"},
    {ViolationCode::kCsOutOfRange, "CS_OUT_OF_RANGE"},
    {ViolationCode::kCsNotHalfInteger, "CS_NOT_HALF_INTEGER"},
    {ViolationCode::kCsGroupAlignment, "CS_GROUP_ALIGNMENT"},
    {ViolationCode::kCsIntervalsDontTile, "CS_INTERVALS_DONT_TILE"},
    {ViolationCode::kSizeMismatch, "SIZE_MISMATCH"},
}};

// Appends violations until the cap is hit, then only records truncation.
class ReportBuilder {
 public:
  bool full() const { return report_.truncated; }

  void Add(ViolationCode code, std::vector<std::size_t> indices, std::string message) {
    if (report_.violations.size() >= kMaxViolations) {
      report_.truncated = true;
      return;
    }
    report_.violations.push_back({code, std::move(indices), std::move(message)});
  }

  ValidationReport Finish() && { return std::move(report_); }

 private:
  ValidationReport report_;
};

template <typename T>
std::string JoinList(const std::vector<T>& items, std::size_t limit = 16) {
  std::ostringstream os;
  for (std::size_t k = 0; k < items.size() && k < limit; ++k) {
    if (k > 0) os << ", ";
    os << items[k];
  }
  if (items.size() > limit) os << ", ...";
  return os.str();
}

// Shared size precondition. Returns n, or nullopt after recording a violation.
std::optional<std::size_t> CheckSize(std::size_t actual, std::optional<std::size_t> expected,
                                     ReportBuilder& out) {
  if (actual == 0) {
    out.Add(ViolationCode::kSizeMismatch, {}, "ranking has no alternatives");
    return std::nullopt;
  }
  if (expected && *expected != actual) {
    out.Add(ViolationCode::kSizeMismatch, {},
            "expected " + std::to_string(*expected) + " entries, got " + std::to_string(actual));
    return std::nullopt;
  }
  return actual;
}

std::vector<std::int64_t> MissingPositions(const std::vector<int>& cover_count) {
  std::vector<std::int64_t> missing;
  for (std::size_t p = 1; p < cover_count.size(); ++p) {
    if (cover_count[p] == 0) missing.push_back(static_cast<std::int64_t>(p));
  }
  return missing;
}

}  // namespace

std::string_view ViolationCodeName(ViolationCode code) {
  for (const auto& [c, name] : kCodeNames) {
    if (c == code) return name;
  }
  return "UNKNOWN";
}

std::optional<ViolationCode> ViolationCodeFromName(std::string_view name) {
  for (const auto& [c, n] : kCodeNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

bool ValidationReport::Has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

bool ValidationReport::Has(ViolationCode code, const std::vector<std::size_t>& indices) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
    return v.code == code && v.indices == indices;
  });
}

ValidationReport ValidatePm(std::span<const std::vector<std::int64_t>> candidate,
                            std::optional<std::size_t> expected_size) {
  ReportBuilder out;
  const auto size = CheckSize(candidate.size(), expected_size, out);
  if (!size) return std::move(out).Finish();
  const auto n = static_cast<std::int64_t>(*size);

  // Per-entry shape. Only well-formed entries (non-empty, in range, a run of
  // consecutive integers) take part in the cross-entry checks below, so a
  // single bad entry is reported once instead of cascading.
  std::vector<std::pair<std::int64_t, std::int64_t>> block(candidate.size());
  std::vector<bool> well_formed(candidate.size(), false);
  std::vector<int> cover_count(*size + 1, 0);
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    std::vector<std::int64_t> entry = candidate[i];
    std::sort(entry.begin(), entry.end());
    entry.erase(std::unique(entry.begin(), entry.end()), entry.end());
    if (entry.empty()) {
      out.Add(ViolationCode::kPmEmptyEntry, {i}, "entry " + std::to_string(i) + " is empty");
      continue;
    }
    bool in_range = true;
    for (const std::int64_t p : entry) {
      if (p < 1 || p > n) {
        in_range = false;
      } else {
        ++cover_count[static_cast<std::size_t>(p)];
      }
    }
    if (!in_range) {
      out.Add(ViolationCode::kPmOutOfRange, {i},
              "entry " + std::to_string(i) + " {" + JoinList(entry) + "} leaves [1, " +
                  std::to_string(n) + "]");
    }
    const bool consecutive = static_cast<std::uint64_t>(entry.back()) -
                                 static_cast<std::uint64_t>(entry.front()) ==
                             entry.size() - 1;
    if (!consecutive) {
      out.Add(ViolationCode::kPmNotConsecutive, {i},
              "entry " + std::to_string(i) + " {" + JoinList(entry) + "} has gaps");
    }
    block[i] = {entry.front(), entry.back()};
    well_formed[i] = in_range && consecutive;
  }

  std::vector<bool> overlapping(candidate.size(), false);
  for (std::size_t i = 0; i < candidate.size() && !out.full(); ++i) {
    if (!well_formed[i]) continue;
    for (std::size_t j = i + 1; j < candidate.size() && !out.full(); ++j) {
      if (!well_formed[j] || block[i] == block[j]) continue;
      const bool intersect =
          std::max(block[i].first, block[j].first) <= std::min(block[i].second, block[j].second);
      if (intersect) {
        overlapping[i] = overlapping[j] = true;
        out.Add(ViolationCode::kPmOverlapNotEqual, {i, j},
                "entries " + std::to_string(i) + " and " + std::to_string(j) +
                    " overlap but differ");
      }
    }
  }

  // A block of k positions must be held by exactly k alternatives.
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> holders;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    if (well_formed[i] && !overlapping[i]) holders[block[i]].push_back(i);
  }
  for (auto& [b, who] : holders) {
    const auto width = static_cast<std::size_t>(b.second - b.first + 1);
    if (who.size() != width) {
      const std::string message = "block [" + std::to_string(b.first) + ", " +
                                  std::to_string(b.second) + "] has " + std::to_string(width) +
                                  " positions but " + std::to_string(who.size()) + " holders";
      out.Add(ViolationCode::kPmMultiplicityMismatch, std::move(who), message);
    }
  }

  if (const auto missing = MissingPositions(cover_count); !missing.empty()) {
    out.Add(ViolationCode::kPmNotPartition, {},
            "positions not covered by any entry: " + JoinList(missing));
  }
  return std::move(out).Finish();
}

ValidationReport ValidateCs(std::span<const Position> candidate,
                            std::optional<std::size_t> expected_size) {
  ReportBuilder out;
  const auto size = CheckSize(candidate.size(), expected_size, out);
  if (!size) return std::move(out).Finish();
  const auto n = static_cast<std::int64_t>(*size);

  std::map<Position, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const Position v = candidate[i];
    if (v < Position::FromInteger(1) || v > Position::FromInteger(n)) {
      out.Add(ViolationCode::kCsOutOfRange, {i},
              "value " + v.ToString() + " at " + std::to_string(i) + " leaves [1, " +
                  std::to_string(n) + "]");
      continue;
    }
    groups[v].push_back(i);
  }

  // Each aligned group claims the run [a, b]; the runs must tile [1, n].
  std::vector<int> cover_count(*size + 1, 0);
  std::vector<std::pair<std::int64_t, std::int64_t>> runs;
  std::vector<const std::vector<std::size_t>*> run_holders;
  bool misaligned = false;
  for (const auto& [value, who] : groups) {
    const auto d = static_cast<std::int64_t>(who.size());
    const std::int64_t doubled_start = value.doubled() - (d - 1);
    if (doubled_start % 2 != 0 || doubled_start < 2) {
      misaligned = true;
      out.Add(ViolationCode::kCsGroupAlignment, who,
              "value " + value.ToString() + " shared by " + std::to_string(d) +
                  " alternatives would start at " +
                  Position::FromDoubled(doubled_start).ToString() +
                  ", not a positive integer");
      continue;
    }
    const std::int64_t a = doubled_start / 2;
    const std::int64_t b = a + d - 1;
    runs.emplace_back(a, b);
    run_holders.push_back(&who);
    for (std::int64_t p = a; p <= std::min(b, n); ++p) ++cover_count[static_cast<std::size_t>(p)];
  }

  std::vector<std::size_t> clashing;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto [a, b] = runs[k];
    bool clash = b > n;
    for (std::int64_t p = a; p <= std::min(b, n) && !clash; ++p) {
      clash = cover_count[static_cast<std::size_t>(p)] > 1;
    }
    if (clash) clashing.insert(clashing.end(), run_holders[k]->begin(), run_holders[k]->end());
  }
  std::sort(clashing.begin(), clashing.end());
  const auto missing = MissingPositions(cover_count);
  if (!clashing.empty() || !missing.empty() || misaligned) {
    std::string message = "position runs do not tile [1, " + std::to_string(n) + "]";
    if (!missing.empty()) message += "; uncovered: " + JoinList(missing);
    if (!clashing.empty()) message += "; overlapping or overflowing runs held by: " + JoinList(clashing);
    out.Add(ViolationCode::kCsIntervalsDontTile, std::move(clashing), message);
  }
  return std::move(out).Finish();
}

}  // namespace weakrank
