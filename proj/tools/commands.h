// Copyright 2026 The Seqgame Authors
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

#ifndef SEQGAME_TOOLS_COMMANDS_H_
#define SEQGAME_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace seqgame::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kCyclicPreference = 3,
  kAssertionFailed = 4,
  kTooLarge = 5,
};

// Runs `seqgame <args...>`; args excludes the program name. Reports go to
// `out`, diagnostics to `err`. Returns the process exit code.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace seqgame::cli

#endif  // SEQGAME_TOOLS_COMMANDS_H_
