// Copyright 2026 The Optimin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPTIMIN_CLI_H_
#define OPTIMIN_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace optimin {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInvalidInput = 2,
  kExitUnsupported = 3,
  kExitViolation = 4,
};

// Runs the command line `args` (args[0] is the program name). "-" as a
// file argument reads `in`; reports go to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace optimin

#endif  // OPTIMIN_CLI_H_
