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

#include "weakrank/core.h"

#include <algorithm>
#include <utility>

namespace weakrank {
namespace {

bool IsLabelStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsLabelChar(char c) { return IsLabelStart(c) || (c >= '0' && c <= '9'); }

std::size_t CountMembers(const std::vector<Ranking::Group>& groups) {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.size();
  return total;
}

}  // namespace

InvalidRepresentation::InvalidRepresentation(ValidationReport report)
    : std::invalid_argument([&] {
        std::string what = "invalid representation";
        if (!report.violations.empty()) {
          what += ": ";
          what += ViolationCodeName(report.violations.front().code);
          what += " (" + report.violations.front().message + ")";
        }
        return what;
      }()),
      report_(std::move(report)) {}

bool IsValidLabel(std::string_view label) {
  if (label.empty() || !IsLabelStart(label.front())) return false;
  return std::all_of(label.begin(), label.end(), IsLabelChar);
}

Roster::Roster(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("roster must not be empty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!IsValidLabel(labels_[i])) {
      throw std::invalid_argument("invalid label \"" + labels_[i] + "\"");
    }
    if (!index_.emplace(labels_[i], i).second) {
      throw std::invalid_argument("duplicate label \"" + labels_[i] + "\"");
    }
  }
}

Roster Roster::Default(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return Roster(std::move(labels));
}

std::optional<std::size_t> Roster::Find(std::string_view label) const {
  if (const auto it = index_.find(label); it != index_.end()) return it->second;
  return std::nullopt;
}

Ranking::Ranking(std::vector<Group> groups) : Ranking(groups, Roster::Default(CountMembers(groups))) {}

Ranking::Ranking(std::vector<Group> groups, Roster roster)
    : groups_(std::move(groups)), roster_(std::move(roster)) {
  const std::size_t n = roster_.size();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  group_of_.assign(n, kUnassigned);
  before_.reserve(groups_.size());
  std::size_t seen = 0;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    auto& members = groups_[g];
    if (members.empty()) throw std::invalid_argument("tie-group " + std::to_string(g) + " is empty");
    std::sort(members.begin(), members.end());
    before_.push_back(seen);
    for (const std::size_t i : members) {
      if (i >= n) {
        throw std::invalid_argument("alternative index " + std::to_string(i) +
                                    " outside roster of " + std::to_string(n));
      }
      if (group_of_[i] != kUnassigned) {
        throw std::invalid_argument("alternative " + roster_.label(i) + " appears twice");
      }
      group_of_[i] = g;
    }
    seen += members.size();
  }
  if (seen != n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (group_of_[i] == kUnassigned) {
        throw std::invalid_argument("alternative " + roster_.label(i) + " is not ranked");
      }
    }
  }
}

DominanceProfile ComputeDominanceProfile(const Ranking& ranking, std::size_t index) {
  if (index >= ranking.size()) {
    throw std::out_of_range("alternative index " + std::to_string(index) + " outside roster of " +
                            std::to_string(ranking.size()));
  }
  const std::size_t g = ranking.GroupOf(index);
  return {static_cast<std::int64_t>(ranking.AlternativesBefore(g)),
          static_cast<std::int64_t>(ranking.groups()[g].size())};
}

std::size_t GroupCount(const Ranking& ranking) { return ranking.groups().size(); }

std::vector<std::int64_t> PositionBlock::Elements() const {
  std::vector<std::int64_t> out;
  for (std::int64_t p = first; p <= last; ++p) out.push_back(p);
  return out;
}

PreferenceMap PreferenceMap::Create(const std::vector<std::vector<std::int64_t>>& entries,
                                    std::optional<Roster> roster) {
  ValidationReport report =
      ValidatePm(entries, roster ? std::optional(roster->size()) : std::nullopt);
  if (!report.valid()) throw InvalidRepresentation(std::move(report));

  std::vector<PositionBlock> blocks;
  blocks.reserve(entries.size());
  for (const auto& e : entries) {
    const auto [lo, hi] = std::minmax_element(e.begin(), e.end());
    blocks.push_back({*lo, *hi});
  }
  return PreferenceMap(std::move(blocks), roster ? std::move(*roster) : Roster::Default(entries.size()));
}

std::vector<std::vector<std::int64_t>> PreferenceMap::ToSets() const {
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(entries_.size());
  for (const auto& b : entries_) out.push_back(b.Elements());
  return out;
}

CookSeifordVector CookSeifordVector::Create(std::vector<Position> values,
                                            std::optional<Roster> roster) {
  ValidationReport report =
      ValidateCs(values, roster ? std::optional(roster->size()) : std::nullopt);
  if (!report.valid()) throw InvalidRepresentation(std::move(report));
  const std::size_t n = values.size();
  return CookSeifordVector(std::move(values), roster ? std::move(*roster) : Roster::Default(n));
}

Position ExpectedPositionTotal(std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return Position::FromDoubled(m * (m + 1));
}

Position MeanPosition(const PositionBlock& block) {
  std::int64_t sum = 0;
  for (const std::int64_t p : block.Elements()) sum += p;
  const std::int64_t count = block.size();
  if ((2 * sum) % count != 0) {
    throw std::logic_error("mean of a position run is not a half-integer");
  }
  return Position::FromDoubled(2 * sum / count);
}

Position MeanPositionTotal(const PreferenceMap& pm) {
  Position total;
  for (const auto& b : pm.entries()) total += MeanPosition(b);
  return total;
}

Position PositionTotal(const CookSeifordVector& cs) {
  Position total;
  for (const Position v : cs.values()) total += v;
  return total;
}

}  // namespace weakrank
