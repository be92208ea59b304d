// Copyright 2026 The pmhll Authors.
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

#ifndef PMHLL_CLI_COMMANDS_H_
#define PMHLL_CLI_COMMANDS_H_

#include <ostream>

namespace pmhll::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInputFormat = 3,
  kExitNumeric = 4,
};

// Entry point for the `pmhll` tool: sim, track, scan, list-presets.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace pmhll::cli

#endif  // PMHLL_CLI_COMMANDS_H_
