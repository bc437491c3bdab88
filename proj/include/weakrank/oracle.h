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

#ifndef WEAKRANK_ORACLE_H_
#define WEAKRANK_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "weakrank/core.h"

namespace weakrank {

// Enumeration is refused above this size unless explicitly allowed
// (n = 8 already yields 545,835 weak orders).
inline constexpr int kDefaultMaxEnumerationSize = 8;
// Hard ceiling, even when large sizes are allowed.
inline constexpr int kMaxEnumerationSize = 16;

struct EnumerationOptions {
  bool allow_large = false;
};

// Throws std::out_of_range unless 1 <= n <= the applicable limit.
void CheckEnumerationSize(int n, EnumerationOptions options = {});

// Input iterator over every weak order on the default roster of n
// alternatives, each exactly once.
//
// Order is lexicographic on the list of tie-groups, each group compared as
// its ascending list of indices. For n = 2: x1 > x2, x1 ~ x2, x2 > x1. This
// is the order of the recursion "pick the top group among the non-empty
// subsets of what is left, then rank the rest", which is also the recurrence
// behind the ordered Bell numbers.
class WeakOrderIterator {
 public:
  using value_type = Ranking;
  using difference_type = std::ptrdiff_t;

  WeakOrderIterator() = default;
  WeakOrderIterator(int n, EnumerationOptions options);

  const Ranking& operator*() const { return *current_; }
  const Ranking* operator->() const { return &*current_; }
  WeakOrderIterator& operator++();
  void operator++(int) { ++*this; }

  friend bool operator==(const WeakOrderIterator& it, std::default_sentinel_t) {
    return !it.current_.has_value();
  }

 private:
  using Mask = std::uint32_t;

  // Lexicographically next non-empty subset of `pool` after `subset`, or 0.
  static Mask NextSubset(Mask subset, Mask pool);
  // Extends levels_ with singleton groups until every alternative is placed.
  void FillRemainder();
  void Materialize();

  int n_ = 0;
  Mask all_ = 0;
  // levels_[k] is the k-th tie-group; pools_[k] what was left to choose from.
  std::vector<Mask> levels_;
  std::vector<Mask> pools_;
  std::optional<Ranking> current_;
};

class WeakOrders {
 public:
  WeakOrders(int n, EnumerationOptions options) : n_(n), options_(options) {}

  WeakOrderIterator begin() const { return WeakOrderIterator(n_, options_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  EnumerationOptions options_;
};

static_assert(std::input_iterator<WeakOrderIterator>);

// Throws std::out_of_range when n is outside the enumeration limits.
WeakOrders EnumerateWeakOrders(int n, EnumerationOptions options = {});

// Outcome of checking every weak order on n alternatives.
struct BijectionReport {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t pm_images_distinct = 0;
  std::uint64_t cs_images_distinct = 0;
  // Weak orders for which any law failed: a validator rejecting an image,
  // a round trip not returning its input, the two ways of computing the C-S
  // vector disagreeing, an entry's C-S value differing from its PM mean, a
  // position total differing from n(n + 1) / 2, or preference order not
  // matching C-S order. Repeats in the enumeration also count.
  std::uint64_t roundtrip_failures = 0;

  bool ok() const {
    return roundtrip_failures == 0 && pm_images_distinct == total && cs_images_distinct == total;
  }

  friend bool operator==(const BijectionReport&, const BijectionReport&) = default;
};

BijectionReport CheckBijection(int n, EnumerationOptions options = {});

// Every law above for one ranking; empty when all hold, else the names of
// the laws that failed.
std::vector<std::string> CheckLaws(const Ranking& ranking);

}  // namespace weakrank

#endif  // WEAKRANK_ORACLE_H_
