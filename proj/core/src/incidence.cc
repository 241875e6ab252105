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

#include "deformcx/incidence.h"

#include <mutex>
#include <string>

#include "deformcx/errors.h"
#include "deformcx/gram.h"

namespace deformcx {
namespace {

void CheckCompatible(const Law& mu, const QuadraticPresentation& p) {
  if (p.type() != OperadType::kCustom) {
    if (mu.dim() != p.law_dim()) throw DimensionMismatch("law dimension does not match presentation");
    if (mu.symmetry() != p.symmetry()) {
      throw SymmetryMismatch("law symmetry '" + std::string(ToString(mu.symmetry())) +
                             "' does not match presentation '" +
                             std::string(ToString(p.type())) + "'");
    }
  }
  if (mu.basis().size() != p.ambient_dim()) {
    throw DimensionMismatch("law coordinates do not match the presentation's ambient space");
  }
}

RatVector Unit(std::size_t m, std::size_t i) {
  RatVector e(m);
  e[i] = 1;
  return e;
}

}  // namespace

struct FiberComplex::Cache {
  std::once_flag ker_delta_once, im_delta_once, ker_phi_once, im_phi_once;
  Subspace ker_delta, im_delta, ker_phi, im_phi;
};

FiberComplex FiberComplex::Build(const Law& mu, const QuadraticPresentation& p,
                                 const ComplexOptions& options) {
  CheckCompatible(mu, p);
  const RatVector coords = mu.Coords();
  SparseVec value = p.Theta(coords, coords);
  if (!value.empty()) {
    std::vector<std::size_t> nonzero;
    for (const auto& e : value) nonzero.push_back(e.first);
    const std::string what = "law does not satisfy the " + std::string(ToString(p.type())) +
                             " identity (" + std::to_string(nonzero.size()) +
                             " nonzero identity coordinates)";
    throw NotOnLocus(what, std::move(nonzero));
  }

  FiberComplex c;
  c.mu_ = std::make_shared<const Law>(mu);
  c.p_ = std::make_shared<const QuadraticPresentation>(p);
  c.rank_mode_ = options.rank_mode;
  c.cache_ = std::make_shared<Cache>();

  QdualMode mode = options.qdual_mode.value_or(p.DefaultQdualMode());
  QdualSpace q = Qdual(p, mode);
  if (!options.qdual_mode && p.type() != OperadType::kLie && mode == QdualMode::kAmbient) {
    q.fell_back_to_ambient = true;
  }
  c.qdual_ = std::make_shared<const QdualSpace>(std::move(q));

  c.delta_ = std::make_shared<const RatMatrix>(DeltaMatrix(mu));
  c.phi_ = std::make_shared<const RatMatrix>(
      RatMatrix::FromColumns(p.target_dim(), p.ThetaColumns(coords)));

  if (!c.phi_->Multiply(*c.delta_).IsZero()) {
    throw VerificationFailure("Phi o delta is not zero");
  }
  return c;
}

const Subspace& FiberComplex::KernelDelta() const {
  std::call_once(cache_->ker_delta_once,
                 [&] { cache_->ker_delta = Kernel(*delta_, rank_mode_); });
  return cache_->ker_delta;
}

const Subspace& FiberComplex::ImageDelta() const {
  std::call_once(cache_->im_delta_once, [&] { cache_->im_delta = Image(*delta_); });
  return cache_->im_delta;
}

const Subspace& FiberComplex::KernelPhi() const {
  std::call_once(cache_->ker_phi_once, [&] { cache_->ker_phi = Kernel(*phi_, rank_mode_); });
  return cache_->ker_phi;
}

const Subspace& FiberComplex::ImagePhi() const {
  std::call_once(cache_->im_phi_once, [&] { cache_->im_phi = Image(*phi_); });
  return cache_->im_phi;
}

RatVector FiberComplex::Delta(const EndW& xi) const { return InfAct(xi, *mu_); }

CohomologyReport Cohomology(const FiberComplex& c) {
  CohomologyReport r;
  r.dim_g = c.dim_g();
  r.dim_aw = c.dim_aw();
  r.dim_qdual = c.dim_qdual();
  r.qdual_mode = c.qdual().mode;
  r.qdual_fell_back = c.qdual().fell_back_to_ambient;

  r.derivations = c.KernelDelta();
  r.rank_delta = c.RankDelta();
  r.rank_phi = c.RankPhi();
  if (r.derivations.dim() + r.rank_delta != r.dim_g) {
    throw VerificationFailure("rank-nullity fails for delta");
  }
  if (c.KernelPhi().dim() + r.rank_phi != r.dim_aw) {
    throw VerificationFailure("rank-nullity fails for Phi");
  }
  r.h2_space = Quotient(c.KernelPhi(), c.ImageDelta());
  r.h3_space = Quotient(c.qdual().space, c.ImagePhi());
  r.h1 = r.derivations.dim();
  r.h2 = r.h2_space.dim();
  r.h3 = r.h3_space.dim();

  r.euler_lhs = static_cast<long>(r.h1) - static_cast<long>(r.h2) + static_cast<long>(r.h3);
  r.euler_rhs = static_cast<long>(r.dim_g) - static_cast<long>(r.dim_aw) +
                static_cast<long>(r.dim_qdual);
  if (r.euler_lhs != r.euler_rhs) {
    throw VerificationFailure("Euler identity fails: " + std::to_string(r.euler_lhs) +
                              " != " + std::to_string(r.euler_rhs));
  }
  return r;
}

RatVector CeCoboundary2(const Law& mu, const Law& a) {
  const std::size_t m = mu.dim();
  if (a.dim() != m) throw DimensionMismatch("CeCoboundary2: cochain dimension");
  RatVector out(IdentitySpaceDim(OperadType::kLie, m));
  for (std::size_t x = 0; x < m; ++x) {
    RatVector ex = Unit(m, x);
    for (std::size_t y = x + 1; y < m; ++y) {
      RatVector ey = Unit(m, y);
      for (std::size_t z = y + 1; z < m; ++z) {
        RatVector ez = Unit(m, z);
        RatVector v = mu.Multiply(ex, a.Product(y, z));
        Axpy(v, -1, mu.Multiply(ey, a.Product(x, z)));
        Axpy(v, 1, mu.Multiply(ez, a.Product(x, y)));
        Axpy(v, -1, a.Multiply(mu.Product(x, y), ez));
        Axpy(v, 1, a.Multiply(mu.Product(x, z), ey));
        Axpy(v, -1, a.Multiply(mu.Product(y, z), ex));
        for (std::size_t i = 0; i < m; ++i) {
          if (sgn(v[i]) != 0) out[IdentityIndex(OperadType::kLie, m, i, x, y, z)] = v[i];
        }
      }
    }
  }
  return out;
}

RatVector CeCoboundary1(const Law& mu, const EndW& xi) {
  const std::size_t m = mu.dim();
  if (xi.dim() != m) throw DimensionMismatch("CeCoboundary1: endomorphism size");
  LawBasis basis(m, Symmetry::kSkew);
  RatVector out(basis.size());
  for (std::size_t x = 0; x < m; ++x) {
    RatVector ex = Unit(m, x);
    for (std::size_t y = x + 1; y < m; ++y) {
      RatVector ey = Unit(m, y);
      RatVector v = mu.Multiply(ex, xi.Apply(ey));
      Axpy(v, -1, mu.Multiply(ey, xi.Apply(ex)));
      Axpy(v, -1, xi.Apply(mu.Product(x, y)));
      for (std::size_t i = 0; i < m; ++i) out[basis.Index(i, x, y)] = v[i];
    }
  }
  return out;
}

std::pair<RatMatrix, RatMatrix> CeTruncation(const Law& mu) {
  if (mu.symmetry() != Symmetry::kSkew) throw NotLie("CeTruncation: law is not skew");
  if (!IsZero(IdentityValue(OperadType::kLie, mu))) {
    throw NotLie("CeTruncation: Jacobi identity fails");
  }
  const std::size_t m = mu.dim();
  LawBasis basis(m, Symmetry::kSkew);
  std::vector<SparseVec> d1_cols(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      d1_cols[a * m + b] = ToSparse(Scale(-1, CeCoboundary1(mu, EndW::Elementary(m, a, b))));
    }
  }
  std::vector<SparseVec> d2_cols(basis.size());
  RatVector e(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p) {
    e[p] = 1;
    d2_cols[p] = ToSparse(CeCoboundary2(mu, Law::FromCoords(m, Symmetry::kSkew, e)));
    e[p] = 0;
  }
  return {RatMatrix::FromColumns(basis.size(), d1_cols),
          RatMatrix::FromColumns(IdentitySpaceDim(OperadType::kLie, m), d2_cols)};
}

RatVector NrHalfSquare(const Law& cochain) {
  return IdentityValue(OperadType::kLie, cochain.WithSymmetry(Symmetry::kSkew));
}

RankProfile ComputeRankProfile(const Law& mu, const QuadraticPresentation& p, RankMode mode) {
  FiberComplex c = FiberComplex::Build(mu, p, {std::nullopt, mode});
  RankProfile r;
  r.rank_delta = Rank(c.delta(), mode);
  r.rank_phi = Rank(c.phi(), mode);
  r.gram_rank = Gram(mu).rank;
  return r;
}

}  // namespace deformcx
