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

#ifndef DEFORMCX_TOOLS_CLI_COMMANDS_H_
#define DEFORMCX_TOOLS_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "cli/schema.h"
#include "deformcx/exactlin.h"
#include "deformcx/modular.h"
#include "deformcx/presentations.h"

namespace deformcx::cli {

struct CommandOptions {
  std::optional<QdualMode> qdual_mode;
  RankMode rank_mode = RankMode::kExact;
  std::uint64_t seed = modular::kDefaultSeed;
  std::size_t trials = 100;
  std::size_t max_basis = 200;  // larger bases are summarized, not listed
};

Json CmdCohomology(const AlgebraInput& in, const CommandOptions& o);
Json CmdObstruction(const AlgebraInput& in, const CommandOptions& o);
Json CmdAnisotropy(const AlgebraInput& in, const CommandOptions& o);
Json CmdGram(const AlgebraInput& in, const CommandOptions& o);

struct LiftRequest {
  std::optional<Json> alpha;           // law entries
  std::optional<RatVector> h2_coords;  // alpha = sum t_i rep_i
};
// Without an explicit alpha, lifts the rational isotropic witness when there
// is one and otherwise the first H^2 representative.
Json CmdLift(const AlgebraInput& in, const LiftRequest& request, const CommandOptions& o);

Json CmdCharacters(const AlgebraInput& in, const CommandOptions& o);
Json CmdRichardson(std::size_t n, bool full, const CommandOptions& o);
Json CmdBuiltin(const std::string& name);
Json CmdBuiltinList();

}  // namespace deformcx::cli

#endif  // DEFORMCX_TOOLS_CLI_COMMANDS_H_
