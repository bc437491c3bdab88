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

#include "weakrank/io.h"

#include <limits>
#include <sstream>
#include <utility>

namespace weakrank {
namespace {

constexpr std::string_view kSucceedsSymbol = "\xE2\x89\xBB";  // U+227B
constexpr std::string_view kTildeOperator = "\xE2\x88\xBC";   // U+223C

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool IsLabelStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool IsLabelChar(char c) { return IsLabelStart(c) || (c >= '0' && c <= '9'); }

enum class Token { kLabel, kPrefer, kTie, kEnd };

class RankingLexer {
 public:
  explicit RankingLexer(std::string_view text) : text_(text) {}

  // Advances to the next token; its text and offset are then available.
  Token Next() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
    start_ = pos_;
    if (pos_ == text_.size()) return Token::kEnd;
    const std::string_view rest = text_.substr(pos_);
    if (rest.front() == '>') return Take(1, Token::kPrefer);
    if (rest.front() == '~') return Take(1, Token::kTie);
    if (rest.starts_with(kSucceedsSymbol)) return Take(kSucceedsSymbol.size(), Token::kPrefer);
    if (rest.starts_with(kTildeOperator)) return Take(kTildeOperator.size(), Token::kTie);
    if (IsLabelStart(rest.front())) {
      std::size_t len = 1;
      while (len < rest.size() && IsLabelChar(rest[len])) ++len;
      return Take(len, Token::kLabel);
    }
    throw ParseError("unexpected character '" + std::string(1, rest.front()) + "'", pos_);
  }

  std::string_view text() const { return text_.substr(start_, pos_ - start_); }
  std::size_t offset() const { return start_; }

 private:
  Token Take(std::size_t len, Token t) {
    pos_ += len;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
};

std::string Describe(Token t) {
  switch (t) {
    case Token::kLabel: return "label";
    case Token::kPrefer: return "'>'";
    case Token::kTie: return "'~'";
    case Token::kEnd: return "end of input";
  }
  return "token";
}

const Json& Field(const Json& object, const char* name) {
  if (!object.is_object()) throw DecodeError("expected a JSON object");
  const auto it = object.find(name);
  if (it == object.end()) throw DecodeError(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& Array(const Json& value, const std::string& what) {
  if (!value.is_array()) throw DecodeError(what + " must be an array");
  return value;
}

std::int64_t Integer(const Json& value, const std::string& what) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned() &&
        value.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw DecodeError(what + " is out of range");
    }
    return value.get<std::int64_t>();
  }
  throw DecodeError(what + " must be an integer");
}

std::size_t Index(const Json& value, const std::string& what) {
  const std::int64_t i = Integer(value, what);
  if (i < 0) throw DecodeError(what + " must not be negative");
  return static_cast<std::size_t>(i);
}

// A C-S value: an exact decimal string, or a JSON number kept as its text.
Position PositionValue(const Json& value, std::size_t index) {
  std::string text;
  if (value.is_string()) {
    text = value.get<std::string>();
  } else if (value.is_number_integer()) {
    text = value.dump();
  } else {
    throw DecodeError("value " + std::to_string(index) + " must be a decimal string");
  }
  try {
    return Position::Parse(text);
  } catch (const PositionFormatError& e) {
    throw DecodeError("value " + std::to_string(index) + ": " + e.what(),
                      e.not_half_integer() ? std::optional(ViolationCode::kCsNotHalfInteger)
                                           : std::nullopt,
                      {index});
  }
}

void ExpectKind(const Json& value, Kind kind) {
  const Json& k = Field(value, "kind");
  if (!k.is_string() || k.get<std::string>() != KindName(kind)) {
    throw DecodeError("expected kind \"" + std::string(KindName(kind)) + "\", got " + k.dump());
  }
}

std::optional<std::vector<std::string>> Labels(const Json& object) {
  if (!object.is_object() || !object.contains("labels")) return std::nullopt;
  std::vector<std::string> labels;
  for (const Json& l : Array(object["labels"], "labels")) {
    if (!l.is_string()) throw DecodeError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

std::optional<Roster> MakeRoster(const std::optional<std::vector<std::string>>& labels) {
  if (!labels) return std::nullopt;
  try {
    return Roster(*labels);
  } catch (const std::invalid_argument& e) {
    throw DecodeError(e.what());
  }
}

Json LabelsJson(const Roster& roster) { return Json(roster.labels()); }

// Forwards to the DOM builder, except that floating-point numbers are stored
// as their source text.
class ExactNumberSax : public nlohmann::json_sax<Json> {
 public:
  explicit ExactNumberSax(Json& result) : dom_(result, true) {}

  bool null() override { return dom_.null(); }
  bool boolean(bool v) override { return dom_.boolean(v); }
  bool number_integer(number_integer_t v) override { return dom_.number_integer(v); }
  bool number_unsigned(number_unsigned_t v) override { return dom_.number_unsigned(v); }
  bool number_float(number_float_t, const string_t& text) override {
    string_t copy = text;
    return dom_.string(copy);
  }
  bool string(string_t& v) override { return dom_.string(v); }
  bool binary(binary_t& v) override { return dom_.binary(v); }
  bool start_object(std::size_t n) override { return dom_.start_object(n); }
  bool key(string_t& v) override { return dom_.key(v); }
  bool end_object() override { return dom_.end_object(); }
  bool start_array(std::size_t n) override { return dom_.start_array(n); }
  bool end_array() override { return dom_.end_array(); }
  bool parse_error(std::size_t position, const std::string& token,
                   const nlohmann::detail::exception& ex) override {
    return dom_.parse_error(position, token, ex);
  }

 private:
  nlohmann::detail::json_sax_dom_parser<Json> dom_;
};

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::invalid_argument(message + " at offset " + std::to_string(offset)), offset_(offset) {}

Ranking ParseRanking(std::string_view text, const std::optional<Roster>& roster) {
  RankingLexer lex(text);
  std::vector<std::string> seen_labels;
  std::vector<Ranking::Group> groups(1);
  std::vector<bool> placed(roster ? roster->size() : 0, false);

  for (;;) {
    if (const Token t = lex.Next(); t != Token::kLabel) {
      throw ParseError("expected label, found " + Describe(t), lex.offset());
    }
    const std::string_view label = lex.text();
    std::size_t index;
    if (roster) {
      const auto found = roster->Find(label);
      if (!found) throw ParseError("label '" + std::string(label) + "' is not in the roster", lex.offset());
      index = *found;
      if (placed[index]) throw ParseError("duplicate label '" + std::string(label) + "'", lex.offset());
      placed[index] = true;
    } else {
      for (const auto& s : seen_labels) {
        if (s == label) throw ParseError("duplicate label '" + std::string(label) + "'", lex.offset());
      }
      index = seen_labels.size();
      seen_labels.emplace_back(label);
    }
    groups.back().push_back(index);

    const Token sep = lex.Next();
    if (sep == Token::kEnd) break;
    if (sep == Token::kPrefer) {
      groups.emplace_back();
    } else if (sep != Token::kTie) {
      throw ParseError("expected '>', '~' or end of input, found " + Describe(sep), lex.offset());
    }
  }

  if (!roster) return Ranking(std::move(groups), Roster(std::move(seen_labels)));
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (!placed[i]) {
      throw ParseError("roster label '" + roster->label(i) + "' does not appear", text.size());
    }
  }
  return Ranking(std::move(groups), *roster);
}

std::string FormatRanking(const Ranking& ranking) {
  std::string out;
  for (std::size_t g = 0; g < ranking.groups().size(); ++g) {
    if (g > 0) out += " > ";
    const auto& members = ranking.groups()[g];
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0) out += " ~ ";
      out += ranking.roster().label(members[k]);
    }
  }
  return out;
}

std::string FormatPm(const PreferenceMap& pm) {
  std::string out = "[";
  for (std::size_t i = 0; i < pm.size(); ++i) {
    if (i > 0) out += ", ";
    out += "{";
    const PositionBlock& b = pm.entry(i);
    for (std::int64_t p = b.first; p <= b.last; ++p) {
      if (p > b.first) out += ", ";
      out += std::to_string(p);
    }
    out += "}";
  }
  return out + "]";
}

std::string FormatCs(const CookSeifordVector& cs) {
  std::string out = "[";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) out += ", ";
    out += cs.value(i).ToString();
  }
  return out + "]";
}

std::string FormatReport(const ValidationReport& report) {
  if (report.valid()) return "valid";
  std::ostringstream os;
  os << "invalid";
  for (const Violation& v : report.violations) {
    os << "\n" << ViolationCodeName(v.code) << " [";
    for (std::size_t k = 0; k < v.indices.size(); ++k) os << (k > 0 ? ", " : "") << v.indices[k];
    os << "]: " << v.message;
  }
  if (report.truncated) os << "\n(further violations omitted)";
  return os.str();
}

std::string FormatReport(const BijectionReport& report) {
  std::ostringstream os;
  os << "n=" << report.n << " total=" << report.total
     << " pm_images_distinct=" << report.pm_images_distinct
     << " cs_images_distinct=" << report.cs_images_distinct
     << " roundtrip_failures=" << report.roundtrip_failures << (report.ok() ? " ok" : " FAILED");
  return os.str();
}

std::vector<BatchLine> ReadBatch(std::istream& in) {
  std::vector<BatchLine> lines;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.push_back({number, line.substr(first, last - first + 1)});
  }
  return lines;
}

std::string_view KindName(Kind kind) {
  switch (kind) {
    case Kind::kRanking: return "ranking";
    case Kind::kPm: return "pm";
    case Kind::kCs: return "cs";
    case Kind::kValidation: return "validation";
    case Kind::kCheck: return "check";
  }
  return "";
}

std::optional<Kind> KindFromName(std::string_view name) {
  for (const Kind k : {Kind::kRanking, Kind::kPm, Kind::kCs, Kind::kValidation, Kind::kCheck}) {
    if (KindName(k) == name) return k;
  }
  return std::nullopt;
}

Json ParseJsonExact(std::string_view text) {
  Json result;
  ExactNumberSax sax(result);
  try {
    Json::sax_parse(text, &sax);
  } catch (const nlohmann::json::exception& e) {
    throw DecodeError(std::string("malformed JSON: ") + e.what());
  }
  return result;
}

std::optional<Kind> DetectKind(const Json& value) {
  if (value.is_object()) {
    const auto it = value.find("kind");
    if (it == value.end() || !it->is_string()) return std::nullopt;
    return KindFromName(it->get<std::string>());
  }
  if (value.is_array()) {
    if (!value.empty() && value.front().is_array()) return Kind::kPm;
    return Kind::kCs;
  }
  return std::nullopt;
}

RawPm RawPmFromJson(const Json& value) {
  RawPm raw;
  const Json* entries = &value;
  if (value.is_object()) {
    ExpectKind(value, Kind::kPm);
    raw.labels = Labels(value);
    entries = &Field(value, "entries");
  }
  for (const Json& entry : Array(*entries, "entries")) {
    const std::string what = "entry " + std::to_string(raw.entries.size());
    std::vector<std::int64_t> set;
    for (const Json& p : Array(entry, what)) set.push_back(Integer(p, what + " element"));
    raw.entries.push_back(std::move(set));
  }
  return raw;
}

RawCs RawCsFromJson(const Json& value) {
  RawCs raw;
  const Json* values = &value;
  if (value.is_object()) {
    ExpectKind(value, Kind::kCs);
    raw.labels = Labels(value);
    values = &Field(value, "values");
  }
  for (const Json& v : Array(*values, "values")) raw.values.push_back(PositionValue(v, raw.values.size()));
  return raw;
}

Json ToJson(const Ranking& ranking) {
  return Json{{"kind", KindName(Kind::kRanking)},
              {"labels", LabelsJson(ranking.roster())},
              {"groups", ranking.groups()}};
}

Json ToJson(const PreferenceMap& pm) {
  return Json{{"kind", KindName(Kind::kPm)},
              {"labels", LabelsJson(pm.roster())},
              {"entries", pm.ToSets()}};
}

Json ToJson(const CookSeifordVector& cs) {
  Json values = Json::array();
  for (const Position v : cs.values()) values.push_back(v.ToString());
  return Json{{"kind", KindName(Kind::kCs)}, {"labels", LabelsJson(cs.roster())}, {"values", values}};
}

Json ToJson(const ValidationReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(
        Json{{"code", ViolationCodeName(v.code)}, {"indices", v.indices}, {"message", v.message}});
  }
  return Json{{"kind", KindName(Kind::kValidation)},
              {"valid", report.valid()},
              {"truncated", report.truncated},
              {"violations", violations}};
}

Json ToJson(const BijectionReport& report) {
  return Json{{"kind", KindName(Kind::kCheck)},
              {"n", report.n},
              {"total", report.total},
              {"pm_images_distinct", report.pm_images_distinct},
              {"cs_images_distinct", report.cs_images_distinct},
              {"roundtrip_failures", report.roundtrip_failures},
              {"ok", report.ok()}};
}

Ranking RankingFromJson(const Json& value) {
  ExpectKind(value, Kind::kRanking);
  std::vector<Ranking::Group> groups;
  for (const Json& g : Array(Field(value, "groups"), "groups")) {
    Ranking::Group members;
    for (const Json& i : Array(g, "group")) members.push_back(Index(i, "group member"));
    groups.push_back(std::move(members));
  }
  try {
    if (auto roster = MakeRoster(Labels(value))) return Ranking(std::move(groups), std::move(*roster));
    return Ranking(std::move(groups));
  } catch (const DecodeError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw DecodeError(std::string("invalid ranking: ") + e.what());
  }
}

PreferenceMap PmFromJson(const Json& value) {
  RawPm raw = RawPmFromJson(value);
  return PreferenceMap::Create(raw.entries, MakeRoster(raw.labels));
}

CookSeifordVector CsFromJson(const Json& value) {
  RawCs raw = RawCsFromJson(value);
  return CookSeifordVector::Create(std::move(raw.values), MakeRoster(raw.labels));
}

ValidationReport ReportFromJson(const Json& value) {
  ExpectKind(value, Kind::kValidation);
  ValidationReport report;
  for (const Json& v : Array(Field(value, "violations"), "violations")) {
    const Json& code = Field(v, "code");
    const auto parsed = code.is_string() ? ViolationCodeFromName(code.get<std::string>()) : std::nullopt;
    if (!parsed) throw DecodeError("unknown violation code " + code.dump());
    Violation violation{*parsed, {}, {}};
    for (const Json& i : Array(Field(v, "indices"), "indices")) violation.indices.push_back(Index(i, "index"));
    const Json& message = Field(v, "message");
    if (!message.is_string()) throw DecodeError("message must be a string");
    violation.message = message.get<std::string>();
    report.violations.push_back(std::move(violation));
  }
  if (value.contains("truncated")) {
    if (!value["truncated"].is_boolean()) throw DecodeError("truncated must be a boolean");
    report.truncated = value["truncated"].get<bool>();
  }
  return report;
}

BijectionReport BijectionReportFromJson(const Json& value) {
  ExpectKind(value, Kind::kCheck);
  const auto count = [&value](const char* name) {
    return static_cast<std::uint64_t>(Index(Field(value, name), name));
  };
  BijectionReport report;
  report.n = static_cast<int>(count("n"));
  report.total = count("total");
  report.pm_images_distinct = count("pm_images_distinct");
  report.cs_images_distinct = count("cs_images_distinct");
  report.roundtrip_failures = count("roundtrip_failures");
  return report;
}

Ranking DecodeRanking(std::string_view text) { return RankingFromJson(ParseJsonExact(text)); }
PreferenceMap DecodePm(std::string_view text) { return PmFromJson(ParseJsonExact(text)); }
CookSeifordVector DecodeCs(std::string_view text) { return CsFromJson(ParseJsonExact(text)); }
ValidationReport DecodeValidationReport(std::string_view text) {
  return ReportFromJson(ParseJsonExact(text));
}
BijectionReport DecodeBijectionReport(std::string_view text) {
  return BijectionReportFromJson(ParseJsonExact(text));
}

}  // namespace weakrank
