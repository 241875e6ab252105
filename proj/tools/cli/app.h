// Copyright 2026 The deformcx Authors
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

#ifndef DEFORMCX_TOOLS_CLI_APP_H_
#define DEFORMCX_TOOLS_CLI_APP_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace deformcx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNotOnLocus = 2;
inline constexpr int kExitSchema = 3;

// Parses the command line and runs one subcommand. The report goes to out;
// diagnostics go to err.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace deformcx::cli

#endif  // DEFORMCX_TOOLS_CLI_APP_H_
