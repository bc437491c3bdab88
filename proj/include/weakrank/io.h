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

#ifndef WEAKRANK_IO_H_
#define WEAKRANK_IO_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "weakrank/core.h"
#include "weakrank/oracle.h"
#include "weakrank/validate.h"

namespace weakrank {

using Json = nlohmann::ordered_json;

// A ranking expression that does not parse. `offset` is the byte offset in
// the source text where the problem was found.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t offset);

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Parses "x1 > x2 ~ x3 > x4": `>` separates tie-groups from best to worst,
// `~` joins tied alternatives, labels are [A-Za-z_][A-Za-z0-9_]*, whitespace
// is ignored. U+227B and U+223C are accepted in place of `>` and `~`.
//
// Without a roster, labels are indexed in order of first appearance. With
// one, every roster label must appear exactly once and nothing else may.
Ranking ParseRanking(std::string_view text, const std::optional<Roster>& roster = std::nullopt);

// Groups joined by " > ", members in roster order joined by " ~ ".
// ParseRanking(FormatRanking(r), r.roster()) == r.
std::string FormatRanking(const Ranking& ranking);

// "[{1}, {2, 3}, {2, 3}, {4}]".
std::string FormatPm(const PreferenceMap& pm);
// "[1, 2.5, 2.5, 4]".
std::string FormatCs(const CookSeifordVector& cs);
// "valid", or "invalid" followed by one line per violation.
std::string FormatReport(const ValidationReport& report);
std::string FormatReport(const BijectionReport& report);

// One line of a batch file, with its 1-based line number.
struct BatchLine {
  std::size_t line_number;
  std::string text;
};

// Batch files hold one ranking expression per line; `#` starts a comment and
// blank lines are skipped.
std::vector<BatchLine> ReadBatch(std::istream& in);

enum class Kind { kRanking, kPm, kCs, kValidation, kCheck };

std::string_view KindName(Kind kind);
std::optional<Kind> KindFromName(std::string_view name);

// Malformed or mistyped JSON. `code()` is set when the problem maps onto a
// validation code, e.g. a C-S value of "2.25" is CS_NOT_HALF_INTEGER, and
// `indices()` then names the offending alternatives.
class DecodeError : public std::invalid_argument {
 public:
  explicit DecodeError(const std::string& message,
                       std::optional<ViolationCode> code = std::nullopt,
                       std::vector<std::size_t> indices = {})
      : std::invalid_argument(message), code_(code), indices_(std::move(indices)) {}

  const std::optional<ViolationCode>& code() const { return code_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  std::optional<ViolationCode> code_;
  std::vector<std::size_t> indices_;
};

// Parses JSON without letting non-integer numbers through binary floating
// point: they come back as strings holding their source text.
Json ParseJsonExact(std::string_view text);

// The "kind" of a JSON object; for a bare array, kPm when its elements are
// arrays and kCs otherwise.
std::optional<Kind> DetectKind(const Json& value);

// A preference map or C-S vector as found in the input, before validation.
struct RawPm {
  std::optional<std::vector<std::string>> labels;
  std::vector<std::vector<std::int64_t>> entries;
};
struct RawCs {
  std::optional<std::vector<std::string>> labels;
  std::vector<Position> values;
};

// Accept either the tagged object form or a bare array.
RawPm RawPmFromJson(const Json& value);
RawCs RawCsFromJson(const Json& value);

Json ToJson(const Ranking& ranking);
Json ToJson(const PreferenceMap& pm);
Json ToJson(const CookSeifordVector& cs);
Json ToJson(const ValidationReport& report);
Json ToJson(const BijectionReport& report);

template <typename T>
std::string EncodeJson(const T& value) {
  return ToJson(value).dump();
}

// These throw DecodeError for malformed input. Well-formed preference maps
// and C-S vectors that fail validation throw InvalidRepresentation.
Ranking RankingFromJson(const Json& value);
PreferenceMap PmFromJson(const Json& value);
CookSeifordVector CsFromJson(const Json& value);
ValidationReport ReportFromJson(const Json& value);
BijectionReport BijectionReportFromJson(const Json& value);

Ranking DecodeRanking(std::string_view text);
PreferenceMap DecodePm(std::string_view text);
CookSeifordVector DecodeCs(std::string_view text);
ValidationReport DecodeValidationReport(std::string_view text);
BijectionReport DecodeBijectionReport(std::string_view text);

}  // namespace weakrank

#endif  // WEAKRANK_IO_H_
