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

#include "weakrank/convert.h"

#include <map>
#include <utility>

namespace weakrank {

PreferenceMap RankingToPm(const Ranking& ranking) {
  std::vector<PositionBlock> entries;
  entries.reserve(ranking.size());
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const DominanceProfile d = ComputeDominanceProfile(ranking, i);
    entries.push_back({d.predecessors + 1, d.predecessors + d.tie_size});
  }
  return PreferenceMap(std::move(entries), ranking.roster());
}

CookSeifordVector RankingToCs(const Ranking& ranking) {
  std::vector<Position> values;
  values.reserve(ranking.size());
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const DominanceProfile d = ComputeDominanceProfile(ranking, i);
    values.push_back(Position::FromDoubled(2 * d.predecessors + d.tie_size + 1));
  }
  return CookSeifordVector(std::move(values), ranking.roster());
}

CookSeifordVector PmToCs(const PreferenceMap& pm) {
  std::vector<Position> values;
  values.reserve(pm.size());
  for (const PositionBlock& b : pm.entries()) values.push_back(b.Midpoint());
  return CookSeifordVector(std::move(values), pm.roster());
}

std::vector<CsDecompositionRow> DecomposeCs(const CookSeifordVector& cs) {
  std::map<Position, std::int64_t> tie_count;
  for (const Position v : cs.values()) ++tie_count[v];

  std::vector<CsDecompositionRow> rows;
  rows.reserve(cs.size());
  for (const Position c : cs.values()) {
    const std::int64_t d = tie_count[c];
    // Validity of `cs` makes c -/+ (d - 1) / 2 whole numbers.
    rows.push_back({c, d, (c.doubled() - (d - 1)) / 2, (c.doubled() + (d - 1)) / 2});
  }
  return rows;
}

PreferenceMap CsToPm(const CookSeifordVector& cs) {
  std::vector<PositionBlock> entries;
  entries.reserve(cs.size());
  for (const CsDecompositionRow& row : DecomposeCs(cs)) entries.push_back({row.first, row.last});
  return PreferenceMap(std::move(entries), cs.roster());
}

Ranking PmToRanking(const PreferenceMap& pm) {
  // Distinct entries are disjoint, so ordering by block orders by minimum.
  std::map<PositionBlock, Ranking::Group> by_block;
  for (std::size_t i = 0; i < pm.size(); ++i) by_block[pm.entry(i)].push_back(i);

  std::vector<Ranking::Group> groups;
  groups.reserve(by_block.size());
  for (auto& [block, members] : by_block) groups.push_back(std::move(members));
  return Ranking(std::move(groups), pm.roster());
}

Ranking CsToRanking(const CookSeifordVector& cs) { return PmToRanking(CsToPm(cs)); }

}  // namespace weakrank
