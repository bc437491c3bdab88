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

#ifndef WEAKRANK_CORE_H_
#define WEAKRANK_CORE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weakrank/position.h"
#include "weakrank/validate.h"

namespace weakrank {

class Ranking;
class PreferenceMap;
class CookSeifordVector;

// Conversions that build representations directly; see convert.h.
PreferenceMap RankingToPm(const Ranking& ranking);
CookSeifordVector RankingToCs(const Ranking& ranking);
CookSeifordVector PmToCs(const PreferenceMap& pm);
PreferenceMap CsToPm(const CookSeifordVector& cs);

// Raised when a preference map or Cook-Seiford vector is built from values
// that fail validation. Carries the full report.
class InvalidRepresentation : public std::invalid_argument {
 public:
  explicit InvalidRepresentation(ValidationReport report);

  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// Labels are identifiers: [A-Za-z_][A-Za-z0-9_]*.
bool IsValidLabel(std::string_view label);

struct AlternativeId {
  std::size_t index;
  std::string label;

  friend bool operator==(const AlternativeId&, const AlternativeId&) = default;
};

// The fixed, ordered list of alternative labels. Alternatives are identified
// by position in the roster; labels only matter for display and parsing.
class Roster {
 public:
  // Throws std::invalid_argument on an empty roster, a bad label or a
  // repeated label.
  explicit Roster(std::vector<std::string> labels);

  // x1, x2, ..., xn.
  static Roster Default(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  AlternativeId at(std::size_t index) const { return {index, label(index)}; }
  std::optional<std::size_t> Find(std::string_view label) const;

  friend bool operator==(const Roster& a, const Roster& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// A weak order on the roster, as an ordered partition: tie-groups from most
// to least preferred. Members of each group are kept in ascending index order.
class Ranking {
 public:
  using Group = std::vector<std::size_t>;

  // Throws std::invalid_argument unless the groups are non-empty, pairwise
  // disjoint, and together hold every roster index exactly once.
  Ranking(std::vector<Group> groups, Roster roster);
  // Uses the default roster sized to the number of indices in `groups`.
  explicit Ranking(std::vector<Group> groups);

  std::size_t size() const { return roster_.size(); }
  const std::vector<Group>& groups() const { return groups_; }
  const Roster& roster() const { return roster_; }

  // Index into groups() of the group holding alternative `index`.
  std::size_t GroupOf(std::size_t index) const { return group_of_.at(index); }
  // Number of alternatives in groups strictly before `group`.
  std::size_t AlternativesBefore(std::size_t group) const { return before_.at(group); }

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.groups_ == b.groups_ && a.roster_ == b.roster_;
  }

 private:
  std::vector<Group> groups_;
  Roster roster_;
  std::vector<std::size_t> group_of_;
  std::vector<std::size_t> before_;
};

// |P_i| and |S_i| for one alternative: how many alternatives are strictly
// preferred to it, and how many share its tie-group (itself included).
struct DominanceProfile {
  std::int64_t predecessors = 0;
  std::int64_t tie_size = 1;

  friend bool operator==(const DominanceProfile&, const DominanceProfile&) = default;
};

// Throws std::out_of_range if `index` is not an alternative of `ranking`.
DominanceProfile ComputeDominanceProfile(const Ranking& ranking, std::size_t index);

std::size_t GroupCount(const Ranking& ranking);

// A run of consecutive ranking positions [first, last].
struct PositionBlock {
  std::int64_t first = 1;
  std::int64_t last = 1;

  std::int64_t size() const { return last - first + 1; }
  // (min + max) / 2.
  Position Midpoint() const { return Position::FromDoubled(first + last); }
  std::vector<std::int64_t> Elements() const;

  friend auto operator<=>(const PositionBlock&, const PositionBlock&) = default;
};

// Per alternative, the set of positions it could occupy. Always valid: the
// only public way in is Create, which runs ValidatePm.
class PreferenceMap {
 public:
  // Throws InvalidRepresentation; a roster of the wrong size is reported as
  // SIZE_MISMATCH.
  static PreferenceMap Create(const std::vector<std::vector<std::int64_t>>& entries,
                              std::optional<Roster> roster = std::nullopt);

  std::size_t size() const { return entries_.size(); }
  const std::vector<PositionBlock>& entries() const { return entries_; }
  const PositionBlock& entry(std::size_t index) const { return entries_.at(index); }
  const Roster& roster() const { return roster_; }

  // Entries expanded to sorted integer lists.
  std::vector<std::vector<std::int64_t>> ToSets() const;

  friend bool operator==(const PreferenceMap&, const PreferenceMap&) = default;

 private:
  PreferenceMap(std::vector<PositionBlock> entries, Roster roster)
      : entries_(std::move(entries)), roster_(std::move(roster)) {}

  friend PreferenceMap RankingToPm(const Ranking&);
  friend PreferenceMap CsToPm(const CookSeifordVector&);

  std::vector<PositionBlock> entries_;
  Roster roster_;
};

// Per alternative, its Cook-Seiford position: tied alternatives share the
// middle of the positions their tie-group spans. Always valid: the only
// public way in is Create, which runs ValidateCs.
class CookSeifordVector {
 public:
  static CookSeifordVector Create(std::vector<Position> values,
                                  std::optional<Roster> roster = std::nullopt);

  std::size_t size() const { return values_.size(); }
  const std::vector<Position>& values() const { return values_; }
  Position value(std::size_t index) const { return values_.at(index); }
  const Roster& roster() const { return roster_; }

  friend bool operator==(const CookSeifordVector&, const CookSeifordVector&) = default;

 private:
  CookSeifordVector(std::vector<Position> values, Roster roster)
      : values_(std::move(values)), roster_(std::move(roster)) {}

  friend CookSeifordVector RankingToCs(const Ranking&);
  friend CookSeifordVector PmToCs(const PreferenceMap&);

  std::vector<Position> values_;
  Roster roster_;
};

// n(n + 1) / 2, the sum of positions 1..n.
Position ExpectedPositionTotal(std::size_t n);

// sum(block) / |block|, computed by adding up the elements.
Position MeanPosition(const PositionBlock& block);

// Sum over alternatives of sum(PM_i) / |PM_i|.
Position MeanPositionTotal(const PreferenceMap& pm);

// Sum over alternatives of CS_i.
Position PositionTotal(const CookSeifordVector& cs);

}  // namespace weakrank

#endif  // WEAKRANK_CORE_H_
