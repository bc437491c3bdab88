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

// Brute-force references used only by tests. Nothing here calls into the
// library's conversion or enumeration code.

#ifndef WEAKRANK_TESTS_TEST_ORACLES_H_
#define WEAKRANK_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace weakrank::testing {

// Ordered Bell numbers from a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1.
inline std::vector<std::uint64_t> OrderedBellNumbers(int max_n) {
  std::vector<std::vector<std::uint64_t>> binom(max_n + 1, std::vector<std::uint64_t>(max_n + 1, 0));
  for (int i = 0; i <= max_n; ++i) {
    binom[i][0] = 1;
    for (int k = 1; k <= i; ++k) binom[i][k] = binom[i - 1][k - 1] + (k <= i - 1 ? binom[i - 1][k] : 0);
  }
  std::vector<std::uint64_t> a(max_n + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) a[n] += binom[n][k] * a[n - k];
  }
  return a;
}

// A weak order as a level per alternative: level 0 is most preferred and the
// levels used are exactly 0..k-1.
using Levels = std::vector<int>;

// Every surjection from n alternatives onto {0..k-1}, for every k, found by
// counting through all n^n level vectors and keeping the gap-free ones.
inline std::vector<Levels> AllWeakOrdersByLevels(int n) {
  std::vector<Levels> out;
  Levels levels(n, 0);
  for (;;) {
    std::set<int> used(levels.begin(), levels.end());
    if (*used.rbegin() + 1 == static_cast<int>(used.size())) out.push_back(levels);
    int pos = 0;
    while (pos < n && ++levels[pos] == n) levels[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

// |P_i| and |S_i| by pairwise comparison.
inline int Predecessors(const Levels& l, int i) {
  int c = 0;
  for (int j = 0; j < static_cast<int>(l.size()); ++j) c += l[j] < l[i];
  return c;
}
inline int TieSize(const Levels& l, int i) {
  int c = 0;
  for (int j = 0; j < static_cast<int>(l.size()); ++j) c += l[j] == l[i];
  return c;
}

// PM_i as an explicit list {|P_i| + 1, ..., |P_i| + |S_i|}.
inline std::vector<std::vector<std::int64_t>> ReferencePm(const Levels& l) {
  std::vector<std::vector<std::int64_t>> pm;
  for (int i = 0; i < static_cast<int>(l.size()); ++i) {
    std::vector<std::int64_t> entry;
    for (int k = 1; k <= TieSize(l, i); ++k) entry.push_back(Predecessors(l, i) + k);
    pm.push_back(entry);
  }
  return pm;
}

// 2 * CS_i, as twice the average of the positions x_i's tie-group spans.
inline std::vector<std::int64_t> ReferenceDoubledCs(const Levels& l) {
  std::vector<std::int64_t> cs;
  for (const auto& entry : ReferencePm(l)) {
    std::int64_t sum = 0;
    for (auto p : entry) sum += p;
    cs.push_back(2 * sum / static_cast<std::int64_t>(entry.size()));
  }
  return cs;
}

// Tie-groups (ascending indices) from best to worst.
inline std::vector<std::vector<std::size_t>> GroupsOf(const Levels& l) {
  int k = 0;
  for (int v : l) k = std::max(k, v + 1);
  std::vector<std::vector<std::size_t>> groups(k);
  for (std::size_t i = 0; i < l.size(); ++i) groups[l[i]].push_back(i);
  return groups;
}

}  // namespace weakrank::testing

#endif  // WEAKRANK_TESTS_TEST_ORACLES_H_
