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

#ifndef DEFORMCX_INCIDENCE_H_
#define DEFORMCX_INCIDENCE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>

#include "deformcx/exactlin.h"
#include "deformcx/laws.h"
#include "deformcx/presentations.h"

namespace deformcx {

struct ComplexOptions {
  // Defaults to the presentation's DefaultQdualMode().
  std::optional<QdualMode> qdual_mode;
  RankMode rank_mode = RankMode::kExact;
};

// The fiber incidence complex  gl(W) --delta--> A_W --Phi--> Q*  at a point
// mu of the locus, with Phi(nu) = Theta(mu, nu). Kernels, images and ranks
// are computed on first use and cached; a FiberComplex may be shared across
// threads once built.
class FiberComplex {
 public:
  // Throws NotOnLocus when F(mu) != 0 and VerificationFailure if the
  // composite Phi o delta is not exactly zero.
  static FiberComplex Build(const Law& mu, const QuadraticPresentation& p,
                            const ComplexOptions& options = {});

  const Law& mu() const { return *mu_; }
  const QuadraticPresentation& presentation() const { return *p_; }
  const QdualSpace& qdual() const { return *qdual_; }
  RankMode rank_mode() const { return rank_mode_; }

  // dim A_W x m^2
  const RatMatrix& delta() const { return *delta_; }
  // target_dim x dim A_W, in coordinates of the ambient identity space V.
  const RatMatrix& phi() const { return *phi_; }

  std::size_t dim_g() const { return mu_->dim() * mu_->dim(); }
  std::size_t dim_aw() const { return phi_->cols(); }
  std::size_t dim_qdual() const { return qdual_->dim(); }

  const Subspace& KernelDelta() const;
  const Subspace& ImageDelta() const;
  const Subspace& KernelPhi() const;
  const Subspace& ImagePhi() const;
  std::size_t RankDelta() const { return ImageDelta().dim(); }
  std::size_t RankPhi() const { return ImagePhi().dim(); }

  RatVector Phi(const RatVector& alpha) const { return phi_->Apply(alpha); }
  RatVector Delta(const EndW& xi) const;

 private:
  struct Cache;
  FiberComplex() = default;

  std::shared_ptr<const Law> mu_;
  std::shared_ptr<const QuadraticPresentation> p_;
  std::shared_ptr<const QdualSpace> qdual_;
  std::shared_ptr<const RatMatrix> delta_;
  std::shared_ptr<const RatMatrix> phi_;
  RankMode rank_mode_ = RankMode::kExact;
  std::shared_ptr<Cache> cache_;
};

struct CohomologyReport {
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::size_t h3 = 0;
  Subspace derivations;  // ker delta = Der(W, mu)
  QuotientSpace h2_space;  // ker Phi / im delta
  QuotientSpace h3_space;  // Q* / im Phi
  long euler_lhs = 0;  // h1 - h2 + h3
  long euler_rhs = 0;  // dim g - dim A_W + dim Q*
  std::size_t rank_delta = 0;
  std::size_t rank_phi = 0;
  std::size_t dim_g = 0;
  std::size_t dim_aw = 0;
  std::size_t dim_qdual = 0;
  QdualMode qdual_mode = QdualMode::kAmbient;
  bool qdual_fell_back = false;
};

// Throws VerificationFailure if the Euler identity fails.
CohomologyReport Cohomology(const FiberComplex& c);

// Standard Chevalley-Eilenberg coboundary of a 2-cochain with adjoint
// coefficients:
//   (d a)(x,y,z) = [x,a(y,z)] - [y,a(x,z)] + [z,a(x,y)]
//                  - a([x,y],z) + a([x,z],y) - a([y,z],x),
// in the Lie identity-space coordinates (i, j<k<l).
RatVector CeCoboundary2(const Law& mu, const Law& cochain);
// (d xi)(x,y) = [x, xi y] - [y, xi x] - xi [x,y], as skew law coordinates.
RatVector CeCoboundary1(const Law& mu, const EndW& xi);

// d1: Hom(L,L) -> Hom(Lambda^2 L, L) and d2: Hom(Lambda^2 L, L) ->
// Hom(Lambda^3 L, L). d1 carries the sign that makes d1 xi = delta_mu(xi);
// d2 is the standard coboundary above. Throws NotLie.
std::pair<RatMatrix, RatMatrix> CeTruncation(const Law& mu);

// Nijenhuis-Richardson square: (1/2)[a, a](x,y,z) = sum_cyc a(a(x,y),z).
RatVector NrHalfSquare(const Law& cochain);

struct RankProfile {
  std::size_t rank_delta = 0;
  std::size_t rank_phi = 0;
  std::size_t gram_rank = 0;
};
RankProfile ComputeRankProfile(const Law& mu, const QuadraticPresentation& p,
                               RankMode mode = RankMode::kExact);

}  // namespace deformcx

#endif  // DEFORMCX_INCIDENCE_H_
