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

#include "weakrank/position.h"

#include <charconv>
#include <cstdlib>
#include <limits>

namespace weakrank {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Position Position::Parse(std::string_view text) {
  const std::string quoted = "\"" + std::string(text) + "\"";
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  std::string_view whole = rest;
  std::string_view fraction;
  if (const auto dot = rest.find('.'); dot != std::string_view::npos) {
    whole = rest.substr(0, dot);
    fraction = rest.substr(dot + 1);
    if (!AllDigits(fraction)) {
      throw PositionFormatError("not a plain decimal: " + quoted, false);
    }
  }
  if (!AllDigits(whole)) {
    throw PositionFormatError("not a plain decimal: " + quoted, false);
  }

  while (!fraction.empty() && fraction.back() == '0') fraction.remove_suffix(1);
  std::int64_t half = 0;
  if (fraction == "5") {
    half = 1;
  } else if (!fraction.empty()) {
    throw PositionFormatError("not a multiple of 0.5: " + quoted, true);
  }

  // Keep 2 * value + 1 representable.
  constexpr std::int64_t kMaxWhole = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), value);
  if (ec != std::errc() || end != whole.data() + whole.size() || value > kMaxWhole) {
    throw PositionFormatError("position out of range: " + quoted, false);
  }
  const std::int64_t doubled = 2 * value + half;
  return Position(negative ? -doubled : doubled);
}

std::string Position::ToString() const {
  const std::int64_t magnitude = doubled_ < 0 ? -doubled_ : doubled_;
  std::string out = doubled_ < 0 ? "-" : "";
  out += std::to_string(magnitude / 2);
  if (magnitude % 2 != 0) out += ".5";
  return out;
}

std::ostream& operator<<(std::ostream& os, Position p) { return os << p.ToString(); }

}  // namespace weakrank
