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

#include "deformcx/exactlin.h"

#include <algorithm>
#include <map>
#include <string>

#include "deformcx/errors.h"
#include "deformcx/modular.h"
#include "elimination.h"

namespace deformcx {
namespace {

using internal::RationalField;
using internal::SparseEchelon;
using RatRow = SparseEchelon<RationalField>::Row;

RatRow ToRow(const SparseVec& v) { return RatRow(v.begin(), v.end()); }

void CheckRange(std::size_t i, std::size_t n, const char* what) {
  if (i >= n) throw DimensionMismatch(std::string(what) + ": index out of range");
}

// Accumulates a sparse linear combination.
class SparseAccumulator {
 public:
  void Add(std::size_t i, const Rat& v) {
    if (sgn(v) == 0) return;
    auto [it, inserted] = acc_.try_emplace(i, v);
    if (!inserted) it->second += v;
  }
  SparseVec Take() {
    SparseVec out;
    out.reserve(acc_.size());
    for (auto& [i, v] : acc_) {
      if (sgn(v) != 0) out.emplace_back(i, std::move(v));
    }
    acc_.clear();
    return out;
  }

 private:
  std::map<std::size_t, Rat> acc_;
};

RowEchelon EchelonOfRows(std::size_t ncols, const std::vector<SparseVec>& rows) {
  SparseEchelon<RationalField> ech(RationalField{}, ncols);
  std::vector<RatRow> in;
  in.reserve(rows.size());
  for (const auto& r : rows) in.push_back(ToRow(r));
  internal::InsertAll(ech, in);
  RowEchelon out;
  for (auto& r : ech.Reduced()) {
    out.pivots.push_back(r.front().first);
    out.rows.emplace_back(r.begin(), r.end());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RatMatrix RatMatrix::Identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rat(1));
  return m;
}

RatMatrix RatMatrix::FromDense(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("FromDense: ragged rows");
    m.data_[r] = ToSparse(rows[r]);
  }
  return m;
}

RatMatrix RatMatrix::FromColumns(std::size_t rows, const std::vector<SparseVec>& columns) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) {
      CheckRange(r, rows, "FromColumns");
      if (sgn(v) != 0) m.data_[r].emplace_back(c, v);
    }
  }
  return m;
}

std::size_t RatMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rat RatMatrix::At(std::size_t r, std::size_t c) const {
  CheckRange(r, rows_, "RatMatrix::At");
  CheckRange(c, cols_, "RatMatrix::At");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

void RatMatrix::Set(std::size_t r, std::size_t c, const Rat& value) {
  CheckRange(r, rows_, "RatMatrix::Set");
  CheckRange(c, cols_, "RatMatrix::Set");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (sgn(value) == 0) {
      row.erase(it);
    } else {
      it->second = value;
    }
  } else if (sgn(value) != 0) {
    row.insert(it, SparseEntry(c, value));
  }
}

void RatMatrix::SetRow(std::size_t r, SparseVec row) {
  CheckRange(r, rows_, "RatMatrix::SetRow");
  std::sort(row.begin(), row.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
  SparseVec clean;
  for (auto& e : row) {
    CheckRange(e.first, cols_, "RatMatrix::SetRow");
    if (!clean.empty() && clean.back().first == e.first) {
      clean.back().second += e.second;
    } else {
      clean.push_back(std::move(e));
    }
  }
  std::erase_if(clean, [](const SparseEntry& e) { return sgn(e.second) == 0; });
  data_[r] = std::move(clean);
}

RatVector RatMatrix::Apply(const RatVector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("RatMatrix::Apply: length mismatch");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) {
      if (sgn(x[c]) != 0) y[r] += v * x[c];
    }
  }
  return y;
}

SparseVec RatMatrix::Apply(const SparseVec& x) const {
  // Column access through the transpose would be faster for repeated use;
  // a dense image of x is good enough here.
  RatVector dense(cols_);
  for (const auto& [i, v] : x) {
    CheckRange(i, cols_, "RatMatrix::Apply");
    dense[i] = v;
  }
  return ToSparse(Apply(dense));
}

RatMatrix RatMatrix::Transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  }
  return t;
}

RatMatrix RatMatrix::Multiply(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("RatMatrix::Multiply: inner dimension");
  RatMatrix out(rows_, other.cols_);
  SparseAccumulator acc;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [k, a] : data_[r]) {
      for (const auto& [c, b] : other.data_[k]) acc.Add(c, a * b);
    }
    out.data_[r] = acc.Take();
  }
  return out;
}

std::vector<RatVector> RatMatrix::ToDense() const {
  std::vector<RatVector> out(rows_, RatVector(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  }
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ----------------------------------------------------------------- Subspace

Subspace::Subspace(std::size_t ambient_dim, std::vector<SparseVec> rref_rows)
    : ambient_dim_(ambient_dim),
      basis_(std::move(rref_rows)),
      row_of_pivot_(ambient_dim, static_cast<std::size_t>(-1)) {
  pivots_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    pivots_.push_back(basis_[i].front().first);
    row_of_pivot_[pivots_.back()] = i;
  }
}

Subspace Subspace::Zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::Whole(std::size_t ambient_dim) {
  std::vector<SparseVec> rows(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) rows[i].emplace_back(i, Rat(1));
  return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::Span(std::size_t ambient_dim, const std::vector<RatVector>& vectors) {
  std::vector<SparseVec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionMismatch("Subspace::Span: vector length");
    rows.push_back(ToSparse(v));
  }
  return Span(ambient_dim, std::move(rows));
}

Subspace Subspace::Span(std::size_t ambient_dim, std::vector<SparseVec> vectors) {
  for (const auto& v : vectors) {
    for (const auto& e : v) CheckRange(e.first, ambient_dim, "Subspace::Span");
  }
  RowEchelon e = EchelonOfRows(ambient_dim, vectors);
  return Subspace(ambient_dim, std::move(e.rows));
}

SparseVec Subspace::Residual(const SparseVec& v) const {
  // Basis rows vanish at every other pivot, so one pass using the original
  // pivot coordinates of v clears them all.
  std::map<std::size_t, Rat> acc;
  for (const auto& [i, x] : v) {
    CheckRange(i, ambient_dim_, "Subspace::Residual");
    if (sgn(x) != 0) acc[i] += x;
  }
  for (const auto& [i, x] : v) {
    std::size_t r = row_of_pivot_.empty() ? static_cast<std::size_t>(-1) : row_of_pivot_[i];
    if (r == static_cast<std::size_t>(-1) || sgn(x) == 0) continue;
    for (const auto& [c, b] : basis_[r]) acc[c] -= x * b;
  }
  SparseVec out;
  for (auto& [i, x] : acc) {
    if (sgn(x) != 0) out.emplace_back(i, std::move(x));
  }
  return out;
}

bool Subspace::Contains(const RatVector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("Subspace::Contains: vector length");
  return Residual(ToSparse(v)).empty();
}

bool Subspace::Contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (const auto& b : other.basis_) {
    if (!Residual(b).empty()) return false;
  }
  return true;
}

RatVector Subspace::Coordinates(const RatVector& v) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("Subspace::Coordinates: vector length");
  RatVector t(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) t[i] = v[pivots_[i]];
  return t;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
}

// ------------------------------------------------------------ QuotientSpace

QuotientSpace QuotientSpace::Make(const Subspace& num, const Subspace& den) {
  if (num.ambient_dim() != den.ambient_dim()) {
    throw DimensionMismatch("Quotient: ambient dimensions differ");
  }
  if (!num.Contains(den)) {
    throw SubspaceNotContained("Quotient: denominator is not contained in numerator");
  }
  QuotientSpace q;
  q.num_ = num;
  q.den_ = den;
  std::vector<SparseVec> reduced;
  reduced.reserve(num.dim());
  for (const auto& b : num.basis()) {
    SparseVec r = den.Residual(b);
    if (!r.empty()) reduced.push_back(std::move(r));
  }
  RowEchelon e = EchelonOfRows(num.ambient_dim(), reduced);
  q.reps_ = std::move(e.rows);
  q.rep_pivots_ = std::move(e.pivots);
  if (q.reps_.size() + den.dim() != num.dim()) {
    throw VerificationFailure("Quotient: dimension count mismatch");
  }
  return q;
}

RatVector QuotientSpace::Reduce(const SparseVec& v) const {
  if (!num_.Contains(v)) {
    throw SubspaceNotContained("QuotientSpace::Reduce: vector not in numerator");
  }
  SparseVec w = den_.Residual(v);
  RatVector t(reps_.size());
  std::size_t k = 0;
  for (const auto& [i, x] : w) {
    while (k < rep_pivots_.size() && rep_pivots_[k] < i) ++k;
    if (k < rep_pivots_.size() && rep_pivots_[k] == i) t[k] = x;
  }
  return t;
}

RatVector QuotientSpace::Reduce(const RatVector& v) const {
  if (v.size() != num_.ambient_dim()) throw DimensionMismatch("QuotientSpace::Reduce: length");
  return Reduce(ToSparse(v));
}

RatVector QuotientSpace::Lift(const RatVector& t) const {
  if (t.size() != reps_.size()) throw DimensionMismatch("QuotientSpace::Lift: length");
  RatVector out(num_.ambient_dim());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (sgn(t[i]) == 0) continue;
    for (const auto& [c, x] : reps_[i]) out[c] += t[i] * x;
  }
  return out;
}

// --------------------------------------------------------------- operations

RowEchelon ReducedRowEchelon(const RatMatrix& m) {
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.Row(r));
  return EchelonOfRows(m.cols(), rows);
}

std::size_t Rank(const RatMatrix& m, RankMode mode) {
  if (mode == RankMode::kModular) return modular::CertifiedRank(m).rank;
  SparseEchelon<RationalField> ech(RationalField{}, m.cols());
  std::vector<RatRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(ToRow(m.Row(r)));
  internal::InsertAll(ech, rows);
  return ech.rank();
}

Subspace Kernel(const RatMatrix& m, RankMode mode) {
  if (mode == RankMode::kModular) return modular::CertifiedRank(m).kernel;
  RowEchelon e = ReducedRowEchelon(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  // Free column f gives v with v_f = 1 and v_pivot(r) = -R[r][f].
  std::vector<SparseVec> vecs(m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    for (std::size_t k = 1; k < e.rows[r].size(); ++k) {
      const auto& [c, x] = e.rows[r][k];
      vecs[c].emplace_back(e.pivots[r], -x);
    }
  }
  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = std::move(vecs[f]);
    v.emplace_back(f, Rat(1));
    std::sort(v.begin(), v.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
    if (!m.Apply(v).empty()) throw VerificationFailure("Kernel: basis vector fails M v = 0");
    basis.push_back(std::move(v));
  }
  return Subspace::Span(m.cols(), std::move(basis));
}

Subspace Image(const RatMatrix& m) {
  RatMatrix t = m.Transpose();
  std::vector<SparseVec> rows;
  rows.reserve(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) rows.push_back(t.Row(r));
  return Subspace::Span(m.rows(), std::move(rows));
}

std::optional<RatVector> Solve(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("Solve: right-hand side length");
  const std::size_t rhs = m.cols();
  std::vector<SparseVec> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec row = m.Row(r);
    if (sgn(b[r]) != 0) row.emplace_back(rhs, b[r]);
    rows.push_back(std::move(row));
  }
  RowEchelon e = EchelonOfRows(m.cols() + 1, rows);
  RatVector x(m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == rhs) return std::nullopt;
    const SparseVec& row = e.rows[r];
    if (row.back().first == rhs) x[e.pivots[r]] = row.back().second;
  }
  if (m.Apply(x) != b) throw VerificationFailure("Solve: substitution check failed");
  return x;
}

std::optional<std::vector<RatVector>> Inverse(const std::vector<RatVector>& square) {
  const std::size_t n = square.size();
  if (n == 0) return std::vector<RatVector>{};
  std::vector<SparseVec> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (square[r].size() != n) throw DimensionMismatch("Inverse: matrix is not square");
    SparseVec row = ToSparse(square[r]);
    row.emplace_back(n + r, Rat(1));
    rows.push_back(std::move(row));
  }
  RowEchelon e = EchelonOfRows(2 * n, rows);
  if (e.rows.size() < n || e.pivots[n - 1] >= n) return std::nullopt;
  std::vector<RatVector> inv(n, RatVector(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, x] : e.rows[r]) {
      if (c >= n) inv[r][c - n] = x;
    }
  }
  return inv;
}

}  // namespace deformcx
