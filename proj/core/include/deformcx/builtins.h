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

#ifndef DEFORMCX_BUILTINS_H_
#define DEFORMCX_BUILTINS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deformcx/charcalc.h"
#include "deformcx/laws.h"

namespace deformcx {

struct BuiltinAlgebra {
  std::string name;
  OperadType type = OperadType::kLie;
  Law law;
  std::optional<TorusAction> torus;  // a torus fixing the law, when known
  std::string description;
};

// Accepts a bare name ("sl2") or a parameterized one ("abelian(3)",
// "richardson(7)"). Throws ParseError for unknown names or bad parameters.
BuiltinAlgebra Builtin(std::string_view spec);

// Every builtin with default parameters, in a fixed order.
std::vector<std::string> BuiltinCatalog();

}  // namespace deformcx

#endif  // DEFORMCX_BUILTINS_H_
