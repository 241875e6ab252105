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

#ifndef DEFORMCX_TOOLS_CLI_SCHEMA_H_
#define DEFORMCX_TOOLS_CLI_SCHEMA_H_

// JSON interchange for algebra inputs and report fragments. Rationals are
// always strings "p" or "p/q"; indices are 1-based.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deformcx/charcalc.h"
#include "deformcx/exactlin.h"
#include "deformcx/laws.h"
#include "deformcx/presentations.h"
#include "json.hpp"

namespace deformcx::cli {

using Json = nlohmann::ordered_json;

struct CustomInput {
  std::size_t target_dim = 0;
  std::vector<TensorEntry> entries;
};

struct AlgebraInput {
  std::string name;
  OperadType type = OperadType::kLie;
  Law law;
  std::optional<CustomInput> custom;
  std::optional<TorusAction> torus;
  std::optional<std::vector<RatVector>> ideal;

  QuadraticPresentation Presentation() const;
};

bool operator==(const AlgebraInput& a, const AlgebraInput& b);

// Throws ParseError (and lets SymmetryMismatch / AsymmetricTensor through)
// on schema violations.
AlgebraInput ParseAlgebra(const Json& j);
Json RenderAlgebra(const AlgebraInput& a);

AlgebraInput FromBuiltin(std::string_view spec);

Json RatJson(const Rat& q);
Rat ParseRatJson(const Json& j, const std::string& where);
Json DenseJson(const RatVector& v);
// [{"index": 1-based, "c": "p/q"}] over the nonzero entries.
Json SparseJson(const RatVector& v);
Json SparseJson(const SparseVec& v);
// Law coordinates as [{"i","j","k","c"}] over the free index set.
Json LawVectorJson(const LawBasis& basis, const RatVector& v);
// End(W) vector (index a*m+b) as [{"row","col","c"}].
Json EndVectorJson(std::size_t m, const RatVector& v);
// Identity-space vector as [{"i","j","k","l","c"}]; custom presentations
// fall back to SparseJson.
Json IdentityVectorJson(const QuadraticPresentation& p, const RatVector& v);
Json MatrixJson(const std::vector<RatVector>& rows);
Json CharacterJson(const Character& c);

// Law coordinates from [{"i","j","k","c"}] entries.
RatVector ParseLawVector(const Json& j, const LawBasis& basis);
// Comma-separated rationals, e.g. "1,0,-1/2".
RatVector ParseRatList(const std::string& text);

}  // namespace deformcx::cli

#endif  // DEFORMCX_TOOLS_CLI_SCHEMA_H_
