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

#ifndef WEAKRANK_CLI_H_
#define WEAKRANK_CLI_H_

#include <istream>
#include <ostream>

namespace weakrank {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

// Runs the `weakrank` command line. Subcommands:
//
//   convert   [INPUT] --to ranking|pm|cs
//   validate  [INPUT]
//   check     --n N
//   enumerate --n N
//
// INPUT is a ranking expression or JSON; with neither INPUT nor --file it is
// read from `in`. Returns 0 on success, 1 when the input is well-formed but
// invalid (or `check` finds a failure), 2 on usage and parse errors.
int RunCli(int argc, const char* const argv[], std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace weakrank

#endif  // WEAKRANK_CLI_H_
