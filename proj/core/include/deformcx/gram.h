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

#ifndef DEFORMCX_GRAM_H_
#define DEFORMCX_GRAM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deformcx/exactlin.h"
#include "deformcx/laws.h"

namespace deformcx {

// gamma(v, w) = Tr(R_v R_w) with right multiplication R_v(w) = mu(w, v).
struct GramForm {
  RatMatrix matrix;  // m x m, symmetric
  std::size_t rank = 0;
  Subspace radical;  // kernel of matrix
};

GramForm Gram(const Law& mu);

// Tr(ad_x ad_y) with ad_x(y) = mu(x, y). For skew laws this equals Gram(mu).
RatMatrix KillingForm(const Law& mu);

enum class IdealSource {
  kSkewDiagonal,     // Lie: span{mu(v, v)} = 0
  kLeibnizKernel,    // span{mu(v, v)}
  kSupplied,         // caller-provided ideal
  kNilpotentOperators,
};
std::string_view ToString(IdealSource s);

struct RadicalReport {
  OperadType type = OperadType::kLie;
  IdealSource source = IdealSource::kSkewDiagonal;
  Subspace ideal;
  Subspace radical;
  bool contained = false;
  // kNilpotentOperators only: the detected ideal was checked to be a
  // nilpotent two-sided ideal. If not, the ideal is reset to zero.
  bool ideal_verified = true;
};

// Leib(L) = span{mu(v, v)} for right Leibniz laws, the given or detected
// nilpotent ideal for Assoc and Comm. Throws NotOnLocus when mu does not
// satisfy the identity of type.
RadicalReport RadicalContainment(const Law& mu, OperadType type,
                                 const std::optional<Subspace>& ideal = std::nullopt);

// span{mu(e_j, e_j), mu(e_j, e_k) + mu(e_k, e_j)}
Subspace LeibnizKernel(const Law& mu);

// Two-sided ideal generated by the basis vectors whose left and right
// multiplication operators are nilpotent, or nullopt when that ideal is not
// nilpotent.
std::optional<Subspace> DetectNilpotentIdeal(const Law& mu);

struct OrbitConstancyReport {
  std::size_t base_rank = 0;
  std::vector<std::size_t> ranks;
  bool constant = true;
  std::uint64_t seed = 0;
};

OrbitConstancyReport GramOrbitConstancy(const Law& mu, std::size_t trials,
                                        std::uint64_t seed = 0x5eed2026ULL);

}  // namespace deformcx

#endif  // DEFORMCX_GRAM_H_
