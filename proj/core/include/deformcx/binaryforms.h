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

#ifndef DEFORMCX_BINARYFORMS_H_
#define DEFORMCX_BINARYFORMS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "deformcx/incidence.h"
#include "deformcx/laws.h"
#include "deformcx/obstruction.h"
#include "deformcx/rational.h"

namespace deformcx {

// A binary form of degree n in the monomial basis v_i = x^{n-i} y^i.
struct BinForm {
  std::size_t degree = 0;
  RatVector coeffs;  // length degree + 1

  static BinForm Zero(std::size_t n);
  static BinForm Monomial(std::size_t n, std::size_t i);
  BinForm operator+(const BinForm& o) const;
  BinForm operator-(const BinForm& o) const;
  BinForm operator*(const Rat& s) const;
  // Single nonzero coefficient index, or npos.
  std::size_t SingleSupport() const;
  bool IsZero() const { return deformcx::IsZero(coeffs); }
  friend bool operator==(const BinForm&, const BinForm&) = default;
};

// d^a/dx^a d^b/dy^b
BinForm Derivative(const BinForm& f, std::size_t a, std::size_t b);
BinForm Product(const BinForm& f, const BinForm& g);

// (f, g)_r = sum_k (-1)^k C(r,k) d^r f/dx^{r-k}dy^k * d^r g/dx^k dy^{r-k}.
// Throws OrderTooHigh when r > min(deg f, deg g).
BinForm Transvectant(const BinForm& f, const BinForm& g, std::size_t r);

// x e + y h + z f with e = x d/dy, f = y d/dx, h = x d/dx - y d/dy.
struct Sl2Element {
  Rat e, h, f;
  static Sl2Element E() { return {1, 0, 0}; }
  static Sl2Element H() { return {0, 1, 0}; }
  static Sl2Element F() { return {0, 0, 1}; }
  Sl2Element operator+(const Sl2Element& o) const { return {e + o.e, h + o.h, f + o.f}; }
  Sl2Element operator*(const Rat& s) const { return {e * s, h * s, f * s}; }
  friend bool operator==(const Sl2Element&, const Sl2Element&) = default;
};

// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
Sl2Element Bracket(const Sl2Element& a, const Sl2Element& b);
BinForm Sl2Act(const Sl2Element& x, const BinForm& f);
// The realized operators satisfy the sl2 relations on Sym^n.
bool VerifySl2Relations(std::size_t n);

// sl2 (x) Sym^{2n}: basis e, h, f, v_0, ..., v_{2n}; [sl2, M] is the action
// and [M, M] = 0.
struct SemidirectLaw {
  std::size_t n = 0;
  Law law;
  std::size_t m_offset() const { return 3; }
};

// Throws VerificationFailure if the Jacobi identity fails.
SemidirectLaw BuildRichardson(std::size_t n);

// The alternating 2-cochain on L_n extending (u, v)_r on Lambda^2 M by zero.
// Needs r = n so the values land in Sym^{2n}. Throws EvenOrderNotAlternating
// for even r and VerificationFailure if the sl2-equivariance
// x.Phi(u,v) - Phi(x.u,v) - Phi(u,x.v) = 0 fails on a basis.
Law PhiCocycle(std::size_t n, std::size_t r);
inline Law PhiCocycle(std::size_t n) { return PhiCocycle(n, n); }

// The equivariant map Sym^2 -> sl2 obtained by solving T(x.q) = [x, T(q)]
// for x in {e, h, f}, normalized by T(x^2) = e. Index 0, 1, 2 is the image
// of x^2, xy, y^2. Throws VerificationFailure unless the solution space is
// one-dimensional.
std::array<Sl2Element, 3> DeriveSym2ToSl2();

struct RatioOptions {
  std::size_t n = 7;
  Rat phi_scale = 1;             // Phi -> phi_scale * Phi
  Rat psi_scale = 1;             // psi -> psi_scale * psi
  Rat identification_scale = 1;  // Sym^2 -> sl2 map rescaled
};

struct RatioEvaluation {
  std::array<std::size_t, 3> triple{};
  BinForm jacobiator;  // J_Phi(u, v, w)
  BinForm dpsi;        // d psi(u, v, w)
  std::size_t index = 0;  // the basis vector both land on
  Rat ratio;
};

// Reference values of the two ratios under the partial-derivative convention.
inline const Rat kReferenceRatio1{"24024/5"};
inline const Rat kReferenceRatio2{"-7392"};

struct RatioTestResult {
  std::size_t n = 7;
  RatioEvaluation first;   // (v_0, v_1, v_{2n-1})
  RatioEvaluation second;  // (v_1, v_2, v_{2n})
  Rat r1, r2, quotient;
  // Convention probe: r1 / kReferenceRatio1 and r2 / kReferenceRatio2. When
  // they agree the implementation differs from the reference by one common
  // scalar.
  Rat scalar1, scalar2;
  bool common_scalar = false;
  // J_Phi is not a multiple of d psi exactly when r1 != r2.
  bool not_proportional = false;
  std::array<Sl2Element, 3> identification{};
};

// psi(u, v) = T((u, v)_{2n-1}) and d psi(u,v,w) the Chevalley-Eilenberg
// coboundary -(psi(v,w).u - psi(u,w).v + psi(u,v).w) on M-triples.
// Throws NotScalarMultiple if an evaluation is not a multiple of the basis
// vector predicted by its weight.
RatioTestResult JacobiatorRatioTest(const RatioOptions& options = {});

BinForm JacobiatorOfTransvectant(const BinForm& u, const BinForm& v, const BinForm& w,
                                 std::size_t r, const Rat& scale = 1);

// 1/2 [phi, phi]_NR vanishes on triples meeting sl2 and equals J_Phi on
// M-triples.
struct NrComparison {
  std::size_t mixed_triples = 0;
  std::size_t m_triples = 0;
  bool mixed_vanish = true;
  bool m_triples_match = true;
};
NrComparison CompareNrSquareWithJacobiator(std::size_t n);

enum class RichardsonMode { kFast, kFull };

struct RichardsonReport {
  RichardsonMode mode = RichardsonMode::kFast;
  std::size_t n = 7;
  RatioTestResult ratios;
  // fast: the verdict assumes dim H^2 = 1; full: it is computed.
  bool conditional = true;
  AnisotropyVerdict verdict;

  // full mode only
  std::size_t dim_law = 0;
  std::size_t h1 = 0, h2 = 0, h3 = 0;
  std::size_t rank_delta = 0, rank_phi = 0;
  long euler_lhs = 0, euler_rhs = 0;
  bool phi_in_kernel = false;       // Phi_mu(phi) = 0
  bool phi_not_coboundary = false;  // phi spans H^2
  RatVector kappa_generator;        // H^3 class of Theta(phi, phi)
  QuadraticObstruction obstruction;
  // Theta(phi, phi) outside im Phi, seen as a rank jump of [Phi | Theta]
  // modulo each prime.
  std::vector<std::uint64_t> certifying_primes;
  std::vector<std::size_t> augmented_ranks;
  bool modular_not_in_image = false;
};

RichardsonReport RichardsonAnisotropy(RichardsonMode mode, std::size_t n = 7,
                                      RankMode rank_mode = RankMode::kModular);

}  // namespace deformcx

#endif  // DEFORMCX_BINARYFORMS_H_
