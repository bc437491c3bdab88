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

#ifndef WEAKRANK_VALIDATE_H_
#define WEAKRANK_VALIDATE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weakrank/position.h"

namespace weakrank {

// One code per structural requirement of a preference map or a
// Cook-Seiford vector.
enum class ViolationCode {
  kPmEmptyEntry,
  kPmNotConsecutive,
  kPmOutOfRange,
  kPmOverlapNotEqual,
  kPmNotPartition,
  kPmMultiplicityMismatch,
  kCsOutOfRange,
  kCsNotHalfInteger,
  kCsGroupAlignment,
  kCsIntervalsDontTile,
  kSizeMismatch,
};

// Wire name, e.g. "PM_NOT_CONSECUTIVE".
std::string_view ViolationCodeName(ViolationCode code);
std::optional<ViolationCode> ViolationCodeFromName(std::string_view name);

struct Violation {
  ViolationCode code;
  // Offending alternative indices, ascending. Empty when the violation is
  // about positions nobody holds rather than about particular alternatives.
  std::vector<std::size_t> indices;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Collects at most this many violations per input.
inline constexpr std::size_t kMaxViolations = 64;

struct ValidationReport {
  std::vector<Violation> violations;
  // Set when more than kMaxViolations were found and the rest were dropped.
  bool truncated = false;

  bool valid() const { return violations.empty(); }
  bool Has(ViolationCode code) const;
  bool Has(ViolationCode code, const std::vector<std::size_t>& indices) const;

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

// Checks that `candidate` could have come from a weak order: every entry is a
// non-empty run of consecutive integers inside [1, n], entries are equal or
// disjoint, each distinct entry is held by exactly as many alternatives as it
// has elements, and the entries cover {1, ..., n}. Entries are read as sets
// (order and repeats inside an entry are ignored).
//
// n is `expected_size` when given, otherwise candidate.size(). An empty
// candidate or a length different from `expected_size` is SIZE_MISMATCH.
ValidationReport ValidatePm(std::span<const std::vector<std::int64_t>> candidate,
                            std::optional<std::size_t> expected_size = std::nullopt);

// Checks that `candidate` could have come from a weak order: grouping equal
// values, a group of d alternatives at value v must start at the positive
// integer a = v - (d - 1) / 2, and the runs [a, a + d - 1] must tile
// {1, ..., n} exactly.
ValidationReport ValidateCs(std::span<const Position> candidate,
                            std::optional<std::size_t> expected_size = std::nullopt);

}  // namespace weakrank

#endif  // WEAKRANK_VALIDATE_H_
