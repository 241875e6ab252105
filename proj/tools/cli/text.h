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

#ifndef DEFORMCX_TOOLS_CLI_TEXT_H_
#define DEFORMCX_TOOLS_CLI_TEXT_H_

#include <string>

#include "cli/schema.h"

namespace deformcx::cli {

// Human-readable rendering generated from the JSON report, so both formats
// carry the same numbers.
std::string RenderText(const Json& report);

}  // namespace deformcx::cli

#endif  // DEFORMCX_TOOLS_CLI_TEXT_H_
