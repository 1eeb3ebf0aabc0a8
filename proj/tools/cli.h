// Copyright 2026 The lexvar Authors
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

#ifndef LEXVAR_TOOLS_CLI_H_
#define LEXVAR_TOOLS_CLI_H_

#include <ostream>

#include "lexvar/error.h"

namespace lexvar::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kStudyError = 3,
};

ExitStatus ExitStatusFor(ErrorCode code);

// Entry point of the `lexvar` tool; returns the process exit status.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lexvar::cli

#endif  // LEXVAR_TOOLS_CLI_H_
