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

#ifndef DEFORMCX_CHARCALC_H_
#define DEFORMCX_CHARCALC_H_

#include <cstddef>
#include <map>
#include <vector>

#include "deformcx/incidence.h"
#include "deformcx/laws.h"

namespace deformcx {

using WeightVector = std::vector<long>;

// A virtual character: weight -> multiplicity, zero multiplicities dropped.
class Character {
 public:
  Character() = default;
  void Add(const WeightVector& w, long multiplicity = 1);
  const std::map<WeightVector, long>& terms() const { return terms_; }
  long Multiplicity(const WeightVector& w) const;
  // Evaluation at the identity of the torus: the total dimension.
  long Degree0() const;
  bool IsEffective() const;
  Character operator+(const Character& o) const;
  Character operator-(const Character& o) const;
  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::map<WeightVector, long> terms_;
};

// Diagonal torus acting on W by e_i -> t^{weights[i]} e_i.
class TorusAction {
 public:
  TorusAction() = default;
  // Throws DimensionMismatch when the tuples have different lengths.
  explicit TorusAction(std::vector<WeightVector> weights);
  std::size_t m() const { return weights_.size(); }
  std::size_t rank() const { return rank_; }
  const std::vector<WeightVector>& weights() const { return weights_; }
  // The s-th generator diag(weights[i][s]) of the torus Lie algebra.
  EndW Generator(std::size_t s) const;
  // inf_act(generator, mu) = 0 for every generator.
  bool Fixes(const Law& mu) const;

  WeightVector OfEndW(std::size_t a, std::size_t b) const;  // chi_a - chi_b
  WeightVector OfLawCoord(const LawBasis& basis, std::size_t index) const;
  WeightVector OfIdentityCoord(OperadType type, std::size_t index) const;

 private:
  std::vector<WeightVector> weights_;
  std::size_t rank_ = 0;
};

struct InducedCharacters {
  Character aw;
  Character qdual;  // ambient identity space
  Character g;
};

// A_W over the free index set of the operad's symmetry type; Q* over W (x)
// Lambda^3 W* for Lie and W (x) (W*)^{(x)3} otherwise; g over W (x) W*.
InducedCharacters InducedCharacter(OperadType type, const TorusAction& t);

struct WeightBlock {
  std::size_t dim_g = 0;
  std::size_t dim_aw = 0;
  std::size_t dim_qdual = 0;
  std::size_t rank_delta = 0;
  std::size_t rank_phi = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  std::size_t h3 = 0;
};

struct GradedCohomology {
  std::map<WeightVector, WeightBlock> blocks;
  Character h1, h2, h3;
  Character g, aw, qdual;
};

// Restricts delta and Phi to weight blocks and computes ranks blockwise.
// Throws TorusDoesNotFix, and VerificationFailure if the blockwise totals
// disagree with the ungraded ranks of c.
GradedCohomology ComputeGradedCohomology(const FiberComplex& c, const TorusAction& t);

// Weight of a homogeneous vector, read off its support. Throws
// VerificationFailure if the support mixes weights.
WeightVector HomogeneousWeight(const SparseVec& v, const std::vector<WeightVector>& coord_weights);

struct ChIdentityReport {
  Character lhs;  // char(H^3), blockwise
  Character rhs;  // char(Q*) - char(A_W) + char(g) - char(h) + char(H^2)
  Character h;    // char(ker delta) from the derivation basis
  Character h2_from_representatives;
  bool holds = false;
  long degree0_lhs = 0;  // h1 - h2 + h3
  long degree0_rhs = 0;  // dim g - dim A_W + dim Q*
  bool degree0_matches_euler = false;
};

ChIdentityReport ChIdentityCheck(const FiberComplex& c, const CohomologyReport& report,
                                 const TorusAction& t);

// gamma(W_chi, W_chi') = 0 unless chi' = -chi.
bool GramWeightOrthogonal(const Law& mu, const TorusAction& t);

}  // namespace deformcx

#endif  // DEFORMCX_CHARCALC_H_
