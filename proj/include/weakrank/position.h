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

#ifndef WEAKRANK_POSITION_H_
#define WEAKRANK_POSITION_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weakrank {

// Thrown by Position::Parse. `not_half_integer()` distinguishes a well-formed
// decimal that is not a multiple of 0.5 (e.g. "2.25") from text that is not a
// plain decimal at all.
class PositionFormatError : public std::invalid_argument {
 public:
  PositionFormatError(const std::string& what, bool not_half_integer)
      : std::invalid_argument(what), not_half_integer_(not_half_integer) {}

  bool not_half_integer() const { return not_half_integer_; }

 private:
  bool not_half_integer_;
};

// An exact half-integer ranking position, stored as twice its value.
//
// Cook-Seiford positions are averages of runs of consecutive integers, so
// they are always integers or integers plus one half. Keeping the doubled
// value as an integer makes equality, ordering and sums exact.
class Position {
 public:
  constexpr Position() = default;

  static constexpr Position FromInteger(std::int64_t value) {
    return Position(2 * value);
  }
  static constexpr Position FromDoubled(std::int64_t doubled) {
    return Position(doubled);
  }

  // Accepts `-?[0-9]+(\.[0-9]+)?` whose value is a multiple of 0.5.
  static Position Parse(std::string_view text);

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  // Shortest exact decimal: "4", "2.5", "-0.5".
  std::string ToString() const;

  friend constexpr auto operator<=>(Position, Position) = default;

  friend constexpr Position operator+(Position a, Position b) {
    return Position(a.doubled_ + b.doubled_);
  }
  friend constexpr Position operator-(Position a, Position b) {
    return Position(a.doubled_ - b.doubled_);
  }
  constexpr Position& operator+=(Position other) {
    doubled_ += other.doubled_;
    return *this;
  }

 private:
  constexpr explicit Position(std::int64_t doubled) : doubled_(doubled) {}

  std::int64_t doubled_ = 0;
};

std::ostream& operator<<(std::ostream& os, Position p);

}  // namespace weakrank

#endif  // WEAKRANK_POSITION_H_
