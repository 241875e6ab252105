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

#ifndef DEFORMCX_LAWS_H_
#define DEFORMCX_LAWS_H_

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "deformcx/exactlin.h"
#include "deformcx/rational.h"

namespace deformcx {

enum class Symmetry { kNone, kSymmetric, kSkew };

std::string_view ToString(Symmetry s);
// Accepts "none", "symmetric", "skew". Throws ParseError otherwise.
Symmetry ParseSymmetry(std::string_view s);

// (i, j, k) addresses the coefficient of e_i in mu(e_j, e_k). 0-based.
struct LawIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  friend bool operator==(const LawIndex&, const LawIndex&) = default;
};

// Fixed flattening of A_W: lexicographic in (i, j, k) over the free index set
// j < k (skew), j <= k (symmetric), or all (j, k).
class LawBasis {
 public:
  LawBasis(std::size_t m, Symmetry symmetry);

  std::size_t m() const { return m_; }
  Symmetry symmetry() const { return symmetry_; }
  std::size_t size() const { return pairs_.size() * m_; }
  std::size_t pair_count() const { return pairs_.size(); }

  LawIndex Triple(std::size_t index) const;
  // Coordinate index of a free (i, j, k). Non-free (j, k) is an error.
  std::size_t Index(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  std::size_t m_;
  Symmetry symmetry_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> pair_index_;  // j * m + k -> pair slot or npos
};

// A bilinear law mu: W x W -> W by structure constants.
class Law {
 public:
  Law() = default;
  Law(std::size_t m, Symmetry symmetry);

  // Reads coordinates in the LawBasis ordering.
  static Law FromCoords(std::size_t m, Symmetry symmetry, const RatVector& coords);

  std::size_t dim() const { return m_; }
  Symmetry symmetry() const { return symmetry_; }
  LawBasis basis() const { return LawBasis(m_, symmetry_); }

  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * m_ + j) * m_ + k];
  }
  // Sets c(i, j, k) and its mirror (j <-> k) as the symmetry type dictates.
  // Throws SymmetryMismatch for a nonzero skew diagonal entry.
  void Set(std::size_t i, std::size_t j, std::size_t k, const Rat& value);

  // mu(x, y)
  RatVector Multiply(const RatVector& x, const RatVector& y) const;
  // mu(e_j, e_k)
  RatVector Product(std::size_t j, std::size_t k) const;

  RatVector Coords() const;
  bool IsZero() const;
  // Same structure constants viewed with another symmetry type. Throws
  // SymmetryMismatch if the constants violate the target type.
  Law WithSymmetry(Symmetry target) const;
  // Checks the symmetry invariant on every entry.
  bool SatisfiesSymmetry() const;

  friend bool operator==(const Law& a, const Law& b) {
    return a.m_ == b.m_ && a.symmetry_ == b.symmetry_ && a.c_ == b.c_;
  }

 private:
  std::size_t m_ = 0;
  Symmetry symmetry_ = Symmetry::kNone;
  std::vector<Rat> c_;
};

// End(W) as a dense m x m matrix; also the Lie algebra of GL(W).
class EndW {
 public:
  EndW() = default;
  explicit EndW(std::size_t m) : m_(m), a_(m * m) {}
  static EndW Identity(std::size_t m);
  // E_{ab}: e_b -> e_a.
  static EndW Elementary(std::size_t m, std::size_t a, std::size_t b);
  static EndW Diagonal(const std::vector<Rat>& d);
  static EndW FromRows(const std::vector<RatVector>& rows);

  std::size_t dim() const { return m_; }
  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * m_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * m_ + c]; }

  RatVector Apply(const RatVector& x) const;
  EndW operator*(const EndW& other) const;
  EndW operator+(const EndW& other) const;
  std::vector<RatVector> Rows() const;
  // Throws SingularGroupElement.
  EndW Inverse() const;
  bool IsInvertible() const;

  friend bool operator==(const EndW&, const EndW&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<Rat> a_;
};

// Transport of structure (g.mu)(x, y) = g mu(g^-1 x, g^-1 y).
Law Act(const EndW& g, const Law& mu);

// Derivative of Act at the identity in direction xi:
// xi(mu(x, y)) - mu(xi x, y) - mu(x, xi y), in LawBasis coordinates.
RatVector InfAct(const EndW& xi, const Law& mu);

// Matrix of delta_mu: End(W) -> A_W; column a*m + b is InfAct(E_ab, mu).
RatMatrix DeltaMatrix(const Law& mu);

enum class OperadType { kAssoc, kComm, kLie, kLeib, kCustom };

std::string_view ToString(OperadType t);
// Accepts "assoc", "comm", "lie", "leib", "custom".
OperadType ParseOperadType(std::string_view s);

// Symmetry type of A_W for a builtin operad.
Symmetry LawSymmetryFor(OperadType t);

// dim V: m * C(m, 3) for Lie (W (x) Lambda^3 W*), m^4 otherwise.
std::size_t IdentitySpaceDim(OperadType t, std::size_t m);

// Coordinate index in V. For Lie (j, k, l) must be strictly increasing.
std::size_t IdentityIndex(OperadType t, std::size_t m, std::size_t i, std::size_t j,
                          std::size_t k, std::size_t l);

// The defining quadratic identity evaluated directly from the structure
// constants: Jacobiator (Lie), associator (Assoc, Comm), right Leibniz defect
// mu(mu(x,y),z) - mu(mu(x,z),y) - mu(x,mu(y,z)) (Leib). Throws
// SymmetryMismatch when mu's symmetry does not match the operad.
RatVector IdentityValue(OperadType t, const Law& mu);

// Random invertible matrix with integer entries in [-bound, bound]; singular
// draws are rejected.
EndW RandomInvertible(std::size_t m, std::mt19937_64& rng, int bound = 3);

}  // namespace deformcx

#endif  // DEFORMCX_LAWS_H_
