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

#include <bit>
#include <set>
#include <string>

#include "weakrank/convert.h"
#include "weakrank/validate.h"

namespace weakrank {

void CheckEnumerationSize(int n, EnumerationOptions options) {
  const int limit = options.allow_large ? kMaxEnumerationSize : kDefaultMaxEnumerationSize;
  if (n < 1 || n > limit) {
    std::string what = "enumeration size " + std::to_string(n) + " outside [1, " +
                       std::to_string(limit) + "]";
    if (!options.allow_large && n > limit && n <= kMaxEnumerationSize) {
      what += "; larger sizes must be allowed explicitly";
    }
    throw std::out_of_range(what);
  }
}

WeakOrderIterator::WeakOrderIterator(int n, EnumerationOptions options) : n_(n) {
  CheckEnumerationSize(n, options);
  all_ = (Mask{1} << n) - 1;
  FillRemainder();
  Materialize();
}

WeakOrderIterator::Mask WeakOrderIterator::NextSubset(Mask subset, Mask pool) {
  const int last = std::bit_width(subset) - 1;
  const Mask above = pool & ~((Mask{2} << last) - 1);
  if (above != 0) return subset | (above & -above);

  subset &= ~(Mask{1} << last);
  if (subset == 0) return 0;
  const int prev = std::bit_width(subset) - 1;
  const Mask after_prev = pool & ~((Mask{2} << prev) - 1);
  subset &= ~(Mask{1} << prev);
  return subset | (after_prev & -after_prev);
}

void WeakOrderIterator::FillRemainder() {
  Mask remaining = levels_.empty() ? all_ : pools_.back() & ~levels_.back();
  while (remaining != 0) {
    const Mask lowest = remaining & -remaining;
    pools_.push_back(remaining);
    levels_.push_back(lowest);
    remaining &= ~lowest;
  }
}

void WeakOrderIterator::Materialize() {
  std::vector<Ranking::Group> groups;
  groups.reserve(levels_.size());
  for (Mask level : levels_) {
    Ranking::Group g;
    for (; level != 0; level &= level - 1) {
      g.push_back(static_cast<std::size_t>(std::countr_zero(level)));
    }
    groups.push_back(std::move(g));
  }
  current_.emplace(std::move(groups), current_ ? current_->roster() : Roster::Default(n_));
}

WeakOrderIterator& WeakOrderIterator::operator++() {
  for (std::size_t k = levels_.size(); k-- > 0;) {
    if (const Mask next = NextSubset(levels_[k], pools_[k]); next != 0) {
      levels_[k] = next;
      levels_.resize(k + 1);
      pools_.resize(k + 1);
      FillRemainder();
      Materialize();
      return *this;
    }
  }
  current_.reset();
  return *this;
}

WeakOrders EnumerateWeakOrders(int n, EnumerationOptions options) {
  CheckEnumerationSize(n, options);
  return WeakOrders(n, options);
}

std::vector<std::string> CheckLaws(const Ranking& ranking) {
  std::vector<std::string> failed;
  const auto expect = [&failed](bool holds, const char* law) {
    if (!holds) failed.emplace_back(law);
  };

  const PreferenceMap pm = RankingToPm(ranking);
  const CookSeifordVector cs = RankingToCs(ranking);
  const Position expected_total = ExpectedPositionTotal(ranking.size());

  expect(ValidatePm(pm.ToSets()).valid(), "pm image validates");
  expect(ValidateCs(cs.values()).valid(), "cs image validates");
  expect(PmToCs(pm) == cs, "direct and composed C-S agree");
  expect(CsToPm(PmToCs(pm)) == pm, "PM -> C-S -> PM");
  expect(PmToCs(CsToPm(cs)) == cs, "C-S -> PM -> C-S");
  expect(PmToRanking(pm) == ranking, "ranking -> PM -> ranking");
  expect(CsToRanking(cs) == ranking, "ranking -> C-S -> ranking");
  expect(MeanPositionTotal(pm) == expected_total, "PM mean total");
  expect(PositionTotal(cs) == expected_total, "C-S total");

  bool means_match = true;
  bool order_preserved = true;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    means_match = means_match && MeanPosition(pm.entry(i)) == cs.value(i);
    for (std::size_t j = 0; j < ranking.size(); ++j) {
      const bool preferred = ranking.GroupOf(i) < ranking.GroupOf(j);
      const bool cs_before = cs.value(i) < cs.value(j);
      const bool pm_before = pm.entry(i).last < pm.entry(j).first;
      order_preserved = order_preserved && preferred == cs_before && preferred == pm_before;
    }
  }
  expect(means_match, "C-S entry equals PM entry mean");
  expect(order_preserved, "preference order matches position order");
  return failed;
}

BijectionReport CheckBijection(int n, EnumerationOptions options) {
  BijectionReport report;
  report.n = n;
  std::set<std::vector<Ranking::Group>> rankings;
  std::set<std::vector<PositionBlock>> pm_images;
  std::set<std::vector<Position>> cs_images;
  for (const Ranking& r : EnumerateWeakOrders(n, options)) {
    ++report.total;
    const bool fresh = rankings.insert(r.groups()).second;
    pm_images.insert(RankingToPm(r).entries());
    cs_images.insert(RankingToCs(r).values());
    if (!fresh || !CheckLaws(r).empty()) ++report.roundtrip_failures;
  }
  report.pm_images_distinct = pm_images.size();
  report.cs_images_distinct = cs_images.size();
  return report;
}

}  // namespace weakrank
