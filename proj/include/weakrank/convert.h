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

#ifndef WEAKRANK_CONVERT_H_
#define WEAKRANK_CONVERT_H_

#include <cstdint>
#include <vector>

#include "weakrank/core.h"
#include "weakrank/position.h"

// Conversions among the three representations of a weak order. Inputs are
// already-valid typed values, so none of these can fail. Every output keeps
// the input's roster.

namespace weakrank {

// PM_i = {|P_i| + 1, ..., |P_i| + |S_i|}.
PreferenceMap RankingToPm(const Ranking& ranking);

// CS_i = |P_i| + (|S_i| + 1) / 2, the middle of the positions x_i's
// tie-group spans. Agrees with PmToCs(RankingToPm(ranking)).
CookSeifordVector RankingToCs(const Ranking& ranking);

// CS_i = (max PM_i + min PM_i) / 2.
CookSeifordVector PmToCs(const PreferenceMap& pm);

// One row of the C-S to PM computation for a single alternative: the center
// c = CS_i, the number d of alternatives sharing that exact value, and the
// resulting block [a, b] with a = c - (d - 1) / 2 and b = c + (d - 1) / 2.
struct CsDecompositionRow {
  Position center;
  std::int64_t tie_count = 1;
  std::int64_t first = 1;
  std::int64_t last = 1;

  friend bool operator==(const CsDecompositionRow&, const CsDecompositionRow&) = default;
};

// Tie counts come from one pass over the sorted distinct values rather than
// an all-pairs comparison; equality is exact.
std::vector<CsDecompositionRow> DecomposeCs(const CookSeifordVector& cs);

// PM_i = {a_i, a_i + 1, ..., b_i} from DecomposeCs.
PreferenceMap CsToPm(const CookSeifordVector& cs);

// Alternatives with identical entries form a tie-group; groups are ordered by
// their smallest position.
Ranking PmToRanking(const PreferenceMap& pm);

Ranking CsToRanking(const CookSeifordVector& cs);

}  // namespace weakrank

#endif  // WEAKRANK_CONVERT_H_
