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

#ifndef DEFORMCX_PRESENTATIONS_H_
#define DEFORMCX_PRESENTATIONS_H_

#include <cstddef>
#include <string_view>
#include <tuple>
#include <vector>

#include "deformcx/exactlin.h"
#include "deformcx/laws.h"
#include "deformcx/rational.h"

namespace deformcx {

// B[a][p][q]: coefficient of nu_p nu_q in F(nu)_a.
struct TensorEntry {
  std::size_t a = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  Rat value;
};

enum class QdualMode { kAmbient, kSpanOfTheta };

std::string_view ToString(QdualMode mode);
// Accepts "ambient" and "span".
QdualMode ParseQdualMode(std::string_view s);

inline constexpr std::size_t kSpanOfThetaLimit = 200;

// A quadratic map F: A_W -> V whose coordinates span the defining quadrics,
// together with its polarization Theta(a, b) = (F(a+b) - F(a) - F(b)) / 2.
class QuadraticPresentation {
 public:
  QuadraticPresentation() = default;

  // Builtin operadic presentation on laws of dimension m.
  static QuadraticPresentation Builtin(OperadType type, std::size_t m);

  OperadType type() const { return type_; }
  std::size_t law_dim() const { return m_; }
  Symmetry symmetry() const { return symmetry_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t target_dim() const { return target_dim_; }

  // Theta(a, b) in V. Throws DimensionMismatch on coordinate length errors.
  SparseVec Theta(const RatVector& a, const RatVector& b) const;
  SparseVec Theta(const Law& a, const Law& b) const;
  RatVector ThetaDense(const RatVector& a, const RatVector& b) const;
  // Theta(a, e_p) for every basis vector e_p of A_W, as sparse columns.
  std::vector<SparseVec> ThetaColumns(const RatVector& a) const;
  RatVector F(const RatVector& a) const { return ThetaDense(a, a); }

  // The symmetric tensor B; computed by polarization for builtins.
  std::vector<TensorEntry> Tensor() const;

  // Lie uses the ambient identity space; the others use the span of Theta
  // when ambient_dim <= 200.
  QdualMode DefaultQdualMode() const;

  friend QuadraticPresentation CustomPresentation(std::vector<TensorEntry> entries,
                                                  std::size_t ambient_dim,
                                                  std::size_t target_dim);
  friend QuadraticPresentation CustomPresentationForLaws(std::vector<TensorEntry> entries,
                                                         std::size_t m, Symmetry symmetry,
                                                         std::size_t target_dim);

 private:
  OperadType type_ = OperadType::kCustom;
  std::size_t m_ = 0;
  Symmetry symmetry_ = Symmetry::kNone;
  std::size_t ambient_dim_ = 0;
  std::size_t target_dim_ = 0;
  // custom only: entries grouped by p, each (q, a, value), both (p,q) orders
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rat>>> by_p_;
};

// Throws AsymmetricTensor unless B[a][p][q] == B[a][q][p]. Entries may list
// both orders of a pair (tensor entries) or only one order, which is then read
// as the coefficient of the monomial nu_p nu_q in F_a and split evenly.
QuadraticPresentation CustomPresentation(std::vector<TensorEntry> entries,
                                         std::size_t ambient_dim, std::size_t target_dim);
// Custom presentation whose ambient space is A_W for (m, symmetry), so it can
// be paired with Law values.
QuadraticPresentation CustomPresentationForLaws(std::vector<TensorEntry> entries, std::size_t m,
                                                Symmetry symmetry, std::size_t target_dim);

// The model of Q* used as the codomain of Phi.
struct QdualSpace {
  QdualMode mode = QdualMode::kAmbient;
  Subspace space;
  // Set when a span model was requested but the ambient model was used.
  bool fell_back_to_ambient = false;
  std::size_t dim() const { return space.dim(); }
};

// Ambient: all of V. SpanOfTheta: span{Theta(e_p, e_q) : p <= q}; throws
// SpanTooLarge when ambient_dim exceeds kSpanOfThetaLimit.
QdualSpace Qdual(const QuadraticPresentation& p, QdualMode mode);

}  // namespace deformcx

#endif  // DEFORMCX_PRESENTATIONS_H_
