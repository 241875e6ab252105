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

#ifndef DEFORMCX_EXACTLIN_H_
#define DEFORMCX_EXACTLIN_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "deformcx/rational.h"

namespace deformcx {

// Sparse rational matrix with row-major storage. Rows are sorted by column
// and never hold explicit zeros.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);

  static RatMatrix Identity(std::size_t n);
  static RatMatrix FromDense(const std::vector<RatVector>& rows, std::size_t cols);
  // Builds a rows x cols matrix from sparse columns.
  static RatMatrix FromColumns(std::size_t rows, const std::vector<SparseVec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  Rat At(std::size_t r, std::size_t c) const;
  void Set(std::size_t r, std::size_t c, const Rat& value);
  void SetRow(std::size_t r, SparseVec row);
  const SparseVec& Row(std::size_t r) const { return data_.at(r); }

  RatVector Apply(const RatVector& x) const;
  SparseVec Apply(const SparseVec& x) const;
  RatMatrix Transpose() const;
  RatMatrix Multiply(const RatMatrix& other) const;
  std::vector<RatVector> ToDense() const;
  bool IsZero() const { return nnz() == 0; }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> data_;
};

// A linear subspace of Q^n held as a reduced row echelon basis: each pivot
// entry is 1, pivots strictly increase, and every basis vector vanishes at
// the other pivots. This makes equality of subspaces a bitwise comparison.
class Subspace {
 public:
  Subspace() = default;

  static Subspace Zero(std::size_t ambient_dim);
  static Subspace Whole(std::size_t ambient_dim);
  static Subspace Span(std::size_t ambient_dim, const std::vector<RatVector>& vectors);
  static Subspace Span(std::size_t ambient_dim, std::vector<SparseVec> vectors);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  RatVector BasisVector(std::size_t i) const { return ToDense(basis_.at(i), ambient_dim_); }

  // v minus its projection along the echelon basis; zero iff v lies in the
  // subspace.
  SparseVec Residual(const SparseVec& v) const;
  bool Contains(const RatVector& v) const;
  bool Contains(const SparseVec& v) const { return Residual(v).empty(); }
  bool Contains(const Subspace& other) const;

  // Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  RatVector Coordinates(const RatVector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Subspace(std::size_t ambient_dim, std::vector<SparseVec> rref_rows);

  std::size_t ambient_dim_ = 0;
  std::vector<SparseVec> basis_;
  std::vector<std::size_t> pivots_;
  // pivot column -> basis row, or npos
  std::vector<std::size_t> row_of_pivot_;
};

// num / den with explicit representatives of a basis of the quotient.
// Representatives vanish on the pivots of den and are themselves in reduced
// echelon form, so Reduce() reads coordinates off the representative pivots.
class QuotientSpace {
 public:
  QuotientSpace() = default;

  // Throws SubspaceNotContained when den is not a subspace of num.
  static QuotientSpace Make(const Subspace& num, const Subspace& den);

  std::size_t dim() const { return reps_.size(); }
  const Subspace& ambient() const { return num_; }
  const Subspace& sub() const { return den_; }
  const std::vector<SparseVec>& representatives() const { return reps_; }
  RatVector Representative(std::size_t i) const { return ToDense(reps_.at(i), num_.ambient_dim()); }

  // Coordinates of the class of v. Throws SubspaceNotContained when v does
  // not lie in the numerator.
  RatVector Reduce(const RatVector& v) const;
  RatVector Reduce(const SparseVec& v) const;
  // sum_i t_i * rep_i
  RatVector Lift(const RatVector& t) const;

 private:
  Subspace num_;
  Subspace den_;
  std::vector<SparseVec> reps_;
  std::vector<std::size_t> rep_pivots_;
};

enum class RankMode { kExact, kModular };

std::size_t Rank(const RatMatrix& m, RankMode mode = RankMode::kExact);

// Right kernel, returned in canonical echelon form. Every basis vector is
// checked to satisfy M v = 0 before returning.
Subspace Kernel(const RatMatrix& m, RankMode mode = RankMode::kExact);

// Column space of m.
Subspace Image(const RatMatrix& m);

// Some x with M x = b, or nullopt when b is not in the column space.
std::optional<RatVector> Solve(const RatMatrix& m, const RatVector& b);

inline QuotientSpace Quotient(const Subspace& num, const Subspace& den) {
  return QuotientSpace::Make(num, den);
}

// Reduced row echelon form of the rows of m (zero rows dropped).
struct RowEchelon {
  std::vector<SparseVec> rows;
  std::vector<std::size_t> pivots;
};
RowEchelon ReducedRowEchelon(const RatMatrix& m);

// Dense square helpers used for group elements.
std::optional<std::vector<RatVector>> Inverse(const std::vector<RatVector>& square);

}  // namespace deformcx

#endif  // DEFORMCX_EXACTLIN_H_
