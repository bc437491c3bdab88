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

#include "weakrank/cli.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "weakrank/convert.h"
#include "weakrank/core.h"
#include "weakrank/io.h"
#include "weakrank/oracle.h"
#include "weakrank/validate.h"

namespace weakrank {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string file;
  std::string kind = "auto";
  std::vector<std::string> labels;
  std::string format = "auto";
  std::string output;
};

using Representation = std::variant<Ranking, PreferenceMap, CookSeifordVector>;

void AddInputOptions(CLI::App& cmd, InputOptions& opts) {
  cmd.add_option("input", opts.input, "Ranking expression or JSON (default: read stdin)");
  cmd.add_option("-f,--file", opts.file, "Read input from a file");
  cmd.add_option("--kind", opts.kind, "Input kind")
      ->check(CLI::IsMember({"auto", "ranking", "pm", "cs"}))
      ->capture_default_str();
  cmd.add_option("--labels", opts.labels, "Comma-separated roster, overriding input labels")
      ->delimiter(',');
}

void AddOutputOptions(CLI::App& cmd, InputOptions& opts, std::vector<std::string> formats) {
  cmd.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  cmd.add_option("-o,--output", opts.output, "Write output to a file");
}

std::string ReadAll(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string ReadInput(const InputOptions& opts, std::istream& in) {
  if (!opts.file.empty() && !opts.input.empty()) {
    throw UsageError("give either an INPUT argument or --file, not both");
  }
  if (!opts.file.empty()) {
    std::ifstream file(opts.file, std::ios::binary);
    if (!file) throw UsageError("cannot read " + opts.file);
    return ReadAll(file);
  }
  if (!opts.input.empty()) return opts.input;
  return ReadAll(in);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

std::optional<Roster> MakeRoster(const std::optional<std::vector<std::string>>& labels) {
  if (!labels || labels->empty()) return std::nullopt;
  try {
    return Roster(*labels);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

struct ClassifiedInput {
  Kind kind;
  std::optional<Json> json;
  std::string_view text;
};

// JSON dispatches on "kind" (or on shape, for bare arrays); anything else is
// a ranking expression.
ClassifiedInput Classify(std::string_view raw, const std::string& forced) {
  const std::string_view text = Trim(raw);
  const bool looks_like_json = !text.empty() && (text.front() == '{' || text.front() == '[');
  if (!looks_like_json) {
    if (forced == "pm" || forced == "cs") throw UsageError(forced + " input must be JSON");
    return {Kind::kRanking, std::nullopt, text};
  }
  Json json = ParseJsonExact(text);
  std::optional<Kind> kind = forced == "auto" ? DetectKind(json) : KindFromName(forced);
  if (!kind) throw UsageError("cannot tell what kind of input this is; use --kind");
  return {*kind, std::move(json), text};
}

Representation Load(const ClassifiedInput& input, const std::optional<Roster>& labels) {
  switch (input.kind) {
    case Kind::kRanking: {
      if (!input.json) return ParseRanking(input.text, labels);
      Ranking r = RankingFromJson(*input.json);
      if (!labels) return r;
      try {
        return Ranking(r.groups(), *labels);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    case Kind::kPm: {
      RawPm raw = RawPmFromJson(*input.json);
      return PreferenceMap::Create(raw.entries, labels ? labels : MakeRoster(raw.labels));
    }
    case Kind::kCs: {
      RawCs raw = RawCsFromJson(*input.json);
      return CookSeifordVector::Create(std::move(raw.values),
                                       labels ? labels : MakeRoster(raw.labels));
    }
    case Kind::kValidation:
    case Kind::kCheck:
      break;
  }
  throw UsageError("a " + std::string(KindName(input.kind)) + " report is not a ranking");
}

Representation ConvertTo(const Representation& from, Kind to) {
  struct Visitor {
    Kind to;
    Representation operator()(const Ranking& r) const {
      if (to == Kind::kPm) return RankingToPm(r);
      if (to == Kind::kCs) return RankingToCs(r);
      return r;
    }
    Representation operator()(const PreferenceMap& pm) const {
      if (to == Kind::kRanking) return PmToRanking(pm);
      if (to == Kind::kCs) return PmToCs(pm);
      return pm;
    }
    Representation operator()(const CookSeifordVector& cs) const {
      if (to == Kind::kRanking) return CsToRanking(cs);
      if (to == Kind::kPm) return CsToPm(cs);
      return cs;
    }
  };
  return std::visit(Visitor{to}, from);
}

std::string Serialize(const Representation& rep, const std::string& format) {
  return std::visit(
      [&format](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        const bool text =
            format == "text" || (format == "auto" && std::is_same_v<T, Ranking>);
        if (!text) return EncodeJson(value);
        if constexpr (std::is_same_v<T, Ranking>) {
          return FormatRanking(value);
        } else if constexpr (std::is_same_v<T, PreferenceMap>) {
          return FormatPm(value);
        } else {
          return FormatCs(value);
        }
      },
      rep);
}

std::string Serialize(const ValidationReport& report, const std::string& format) {
  return format == "json" ? EncodeJson(report) : FormatReport(report);
}

// Maps exceptions to exit codes, printing diagnostics to `err`.
template <typename Body>
int Guarded(std::ostream& err, const std::string& context, Body&& body) {
  const std::string prefix = context.empty() ? "error: " : "error: " + context + ": ";
  try {
    return body();
  } catch (const InvalidRepresentation& e) {
    err << prefix << FormatReport(e.report()) << "\n";
    return kExitInvalid;
  } catch (const DecodeError& e) {
    err << prefix << e.what() << "\n";
    return e.code() ? kExitInvalid : kExitUsage;
  } catch (const std::exception& e) {
    err << prefix << e.what() << "\n";
    return kExitUsage;
  }
}

// Writes to --output when given, else to `out`.
int Emit(const InputOptions& opts, std::ostream& out, std::ostream& err, const std::string& body) {
  if (opts.output.empty()) {
    out << body;
    return kExitOk;
  }
  std::ofstream file(opts.output, std::ios::binary | std::ios::trunc);
  if (!file || !(file << body)) {
    err << "error: cannot write " << opts.output << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

int RunConvert(const InputOptions& opts, const std::string& to, bool batch, std::istream& in,
               std::ostream& out, std::ostream& err) {
  const Kind target = *KindFromName(to);
  std::optional<Roster> labels;
  std::string text;
  int status = Guarded(err, "", [&] {
    labels = MakeRoster(opts.labels);
    text = ReadInput(opts, in);
    return kExitOk;
  });
  if (status != kExitOk) return status;

  std::string body;
  const auto convert_one = [&](std::string_view source) {
    const Representation rep = Load(Classify(source, opts.kind), labels);
    body += Serialize(ConvertTo(rep, target), opts.format);
    body += "\n";
    return kExitOk;
  };

  if (!batch) {
    status = Guarded(err, "", [&] { return convert_one(text); });
  } else {
    std::istringstream lines(text);
    for (const BatchLine& line : ReadBatch(lines)) {
      status = std::max(status, Guarded(err, "line " + std::to_string(line.line_number),
                                        [&] { return convert_one(line.text); }));
    }
  }
  return std::max(status, Emit(opts, out, err, body));
}

int RunValidate(const InputOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  ValidationReport report;
  const int status = Guarded(err, "", [&] {
    const std::optional<Roster> labels = MakeRoster(opts.labels);
    const std::string text = ReadInput(opts, in);
    const ClassifiedInput input = Classify(text, opts.kind);
    const std::optional<std::size_t> size =
        labels ? std::optional(labels->size()) : std::nullopt;
    try {
      switch (input.kind) {
        case Kind::kRanking:
          Load(input, labels);
          break;
        case Kind::kPm: {
          const RawPm raw = RawPmFromJson(*input.json);
          const auto roster = labels ? labels : MakeRoster(raw.labels);
          report = ValidatePm(raw.entries, roster ? std::optional(roster->size()) : size);
          break;
        }
        case Kind::kCs: {
          const RawCs raw = RawCsFromJson(*input.json);
          const auto roster = labels ? labels : MakeRoster(raw.labels);
          report = ValidateCs(raw.values, roster ? std::optional(roster->size()) : size);
          break;
        }
        default:
          throw UsageError("only rankings, preference maps and C-S vectors can be validated");
      }
    } catch (const DecodeError& e) {
      if (!e.code()) throw;
      report.violations.push_back({*e.code(), e.indices(), e.what()});
    }
    return kExitOk;
  });
  if (status != kExitOk) return status;
  const std::string format = opts.format == "auto" ? "text" : opts.format;
  const int written = Emit(opts, out, err, Serialize(report, format) + "\n");
  return written != kExitOk ? written : (report.valid() ? kExitOk : kExitInvalid);
}

int RunCheck(const InputOptions& opts, int n, bool allow_large, std::ostream& out,
             std::ostream& err) {
  BijectionReport report;
  const int status = Guarded(err, "", [&] {
    report = CheckBijection(n, {.allow_large = allow_large});
    return kExitOk;
  });
  if (status != kExitOk) return status;
  const std::string body = (opts.format == "json" ? EncodeJson(report) : FormatReport(report)) + "\n";
  const int written = Emit(opts, out, err, body);
  return written != kExitOk ? written : (report.ok() ? kExitOk : kExitInvalid);
}

int RunEnumerate(const InputOptions& opts, int n, bool allow_large, std::ostream& out,
                 std::ostream& err) {
  std::string body;
  const int status = Guarded(err, "", [&] {
    const WeakOrders all = EnumerateWeakOrders(n, {.allow_large = allow_large});
    if (opts.format == "json") {
      Json array = Json::array();
      for (const Ranking& r : all) array.push_back(ToJson(r));
      body = array.dump() + "\n";
    } else {
      for (const Ranking& r : all) body += FormatRanking(r) + "\n";
    }
    return kExitOk;
  });
  if (status != kExitOk) return status;
  return Emit(opts, out, err, body);
}

}  // namespace

int RunCli(int argc, const char* const argv[], std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app("Convert between weak-order rankings, preference maps and Cook-Seiford vectors",
               "weakrank");
  app.require_subcommand(1);

  InputOptions convert_opts;
  std::string to;
  bool batch = false;
  CLI::App* convert = app.add_subcommand("convert", "Convert an input to another representation");
  AddInputOptions(*convert, convert_opts);
  AddOutputOptions(*convert, convert_opts, {"auto", "text", "json"});
  convert->add_option("--to", to, "Target representation")
      ->required()
      ->check(CLI::IsMember({"ranking", "pm", "cs"}));
  convert->add_flag("--batch", batch, "Treat each input line as a separate item");

  InputOptions validate_opts;
  CLI::App* validate = app.add_subcommand("validate", "Check an input and report violations");
  AddInputOptions(*validate, validate_opts);
  AddOutputOptions(*validate, validate_opts, {"auto", "text", "json"});

  InputOptions check_opts;
  check_opts.format = "text";
  int check_n = 0;
  bool check_large = false;
  CLI::App* check = app.add_subcommand("check", "Verify every conversion law over all weak orders");
  check->add_option("--n", check_n, "Number of alternatives")->required();
  check->add_flag("--allow-large", check_large, "Permit n above the default limit");
  AddOutputOptions(*check, check_opts, {"text", "json"});

  InputOptions enumerate_opts;
  enumerate_opts.format = "text";
  int enumerate_n = 0;
  bool enumerate_large = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "List every weak order on n alternatives");
  enumerate->add_option("--n", enumerate_n, "Number of alternatives")->required();
  enumerate->add_flag("--allow-large", enumerate_large, "Permit n above the default limit");
  AddOutputOptions(*enumerate, enumerate_opts, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (convert->parsed()) return RunConvert(convert_opts, to, batch, in, out, err);
  if (validate->parsed()) return RunValidate(validate_opts, in, out, err);
  if (check->parsed()) return RunCheck(check_opts, check_n, check_large, out, err);
  return RunEnumerate(enumerate_opts, enumerate_n, enumerate_large, out, err);
}

}  // namespace weakrank
