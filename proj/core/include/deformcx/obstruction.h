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

#ifndef DEFORMCX_OBSTRUCTION_H_
#define DEFORMCX_OBSTRUCTION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deformcx/incidence.h"
#include "deformcx/rational.h"

namespace deformcx {

// kappa_2(t)_c = t^T K_c t in H^2 / H^3 coordinates.
struct QuadraticObstruction {
  std::size_t h2_dim = 0;
  std::size_t h3_dim = 0;
  std::vector<std::vector<RatVector>> forms;  // h3_dim symmetric h2_dim x h2_dim matrices
  std::vector<RatVector> representatives;     // H^2 representatives in A_W
};

QuadraticObstruction Kappa2(const FiberComplex& c, const CohomologyReport& report);

// t^T K_c t for every c.
RatVector EvaluateForms(const QuadraticObstruction& k, const RatVector& t);

// Class of Theta(alpha_t, alpha_t) in H^3 for alpha_t = sum_i t_i rep_i,
// reduced directly rather than through the forms.
RatVector Kappa2Direct(const FiberComplex& c, const CohomologyReport& report, const RatVector& t);

// Class of Theta(alpha, alpha) for alpha in ker Phi, in H^3 coordinates.
RatVector ObstructionClass(const FiberComplex& c, const CohomologyReport& report,
                           const RatVector& alpha);

struct LiftResult {
  bool lifted = false;
  RatVector beta;              // when lifted
  RatVector obstruction_class; // H^3 coordinates, when not lifted
  // Coefficients of t^0, t^1, t^2 of F(mu + t alpha + t^2 beta), recovered
  // by evaluating F at t = 0..4 and interpolating. All zero when lifted.
  std::vector<RatVector> truncated_coefficients;
};

// Solves 2 Phi(beta) = -Theta(alpha, alpha). Throws FirstOrderObstructed
// when Phi(alpha) != 0 and VerificationFailure if a found beta does not
// pass the truncated substitution check.
LiftResult SecondOrderLift(const FiberComplex& c, const CohomologyReport& report,
                           const RatVector& alpha);

// Coefficients c_0..c_4 of F(mu + t alpha + t^2 beta). The builtin identity
// is evaluated directly on the laws; custom presentations use F.
std::vector<RatVector> LiftPolynomial(const FiberComplex& c, const RatVector& alpha,
                                      const RatVector& beta);

struct WellDefinedReport {
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t cross_terms_checked = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && passed == trials; }
};

// For random alpha in ker Phi and xi in gl(W): the class of
// Theta(alpha + delta xi, alpha + delta xi) equals that of Theta(alpha, alpha),
// Theta(alpha, delta xi) and Theta(delta xi, delta xi) lie in im Phi, and for
// builtin presentations Theta(delta xi, alpha) = -Phi(xi . alpha).
WellDefinedReport CheckWellDefined(const FiberComplex& c, const CohomologyReport& report,
                                   std::size_t trials, std::uint64_t seed = 0x5eed2026ULL);

enum class VerdictKind { kCertifiedAnisotropic, kIsotropicWitness, kHeuristicAnisotropic };
enum class CertificateReason { kNone, kVacuousH2Zero, kDim1NonzeroForm, kDim2GcdCertificate };
enum class WitnessField { kRational, kQuadraticExtension, kFiniteField };

std::string_view ToString(VerdictKind k);
std::string_view ToString(CertificateReason r);
std::string_view ToString(WitnessField f);

struct AnisotropyVerdict {
  VerdictKind kind = VerdictKind::kCertifiedAnisotropic;
  CertificateReason reason = CertificateReason::kNone;

  WitnessField field = WitnessField::kRational;
  RatVector witness;                         // rational witness
  std::vector<std::uint64_t> witness_mod_p;  // finite-field witness
  std::uint64_t witness_prime = 0;
  // Quadratic extension: the common factor a s^2 + b s + c of the forms in
  // s = t_1 / t_2, with discriminant b^2 - 4ac a non-square.
  RatVector gcd_factor;

  // d = 1: the values K_c[0][0]. d = 2: the common gcd in s (coefficients
  // low to high).
  RatVector certificate;

  std::vector<std::uint64_t> primes_tested;
  std::uint64_t search_exhaustive_up_to = 0;  // largest prime searched exhaustively
  std::size_t rational_box = 0;               // |t_i| <= rational_box searched exhaustively
  std::size_t random_trials = 0;
  std::uint64_t seed = 0;
};

struct AnisotropyOptions {
  std::uint64_t seed = 0x5eed2026ULL;
  std::size_t random_trials = 2000;
  std::int64_t random_height = 10000;
  std::uint64_t point_cap = 2000000;  // projective points per prime
  std::size_t box_cap = 200000;       // integer points in the rational box
};

AnisotropyVerdict Anisotropy(const QuadraticObstruction& k, const AnisotropyOptions& options = {});

}  // namespace deformcx

#endif  // DEFORMCX_OBSTRUCTION_H_
