// Copyright 2026 The relanno Authors.
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

#ifndef RELANNO_TOOLS_CLI_H_
#define RELANNO_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace relanno::cli {

enum ExitCode {
  kExitOk = 0,
  kExitValidationErrors = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

// Runs one command. `args` excludes the program name. Input defaults to
// `in` and output to `out`; diagnostics go to `err` only.
int Run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

}  // namespace relanno::cli

#endif  // RELANNO_TOOLS_CLI_H_
