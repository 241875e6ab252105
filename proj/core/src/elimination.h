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

#ifndef DEFORMCX_SRC_ELIMINATION_H_
#define DEFORMCX_SRC_ELIMINATION_H_

// Sparse Gaussian elimination shared by the rational and modular paths.
// Rows are inserted one at a time and reduced against the pivots found so
// far; fill-in stays inside the connected blocks of the row/column incidence
// graph, which is what keeps the weight-graded complexes cheap.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "deformcx/rational.h"

namespace deformcx::internal {

struct RationalField {
  using value_type = Rat;
  static bool IsZero(const Rat& x) { return sgn(x) == 0; }
  static Rat Inverse(const Rat& x) { return 1 / x; }
  static void Normalize(Rat& x, const Rat& inv) { x *= inv; }
  // acc -= a * b
  static void SubMul(Rat& acc, const Rat& a, const Rat& b) { acc -= a * b; }
  static Rat Negate(const Rat& x) { return -x; }
  static Rat Zero() { return Rat(0); }
};

class PrimeField {
 public:
  using value_type = std::uint64_t;
  explicit PrimeField(std::uint64_t p) : p_(p) {}

  std::uint64_t modulus() const { return p_; }
  static bool IsZero(std::uint64_t x) { return x == 0; }
  std::uint64_t Mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t Pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = Mul(r, a);
      a = Mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t Inverse(std::uint64_t x) const { return Pow(x, p_ - 2); }
  void Normalize(std::uint64_t& x, std::uint64_t inv) const { x = Mul(x, inv); }
  void SubMul(std::uint64_t& acc, std::uint64_t a, std::uint64_t b) const {
    std::uint64_t t = Mul(a, b);
    acc = acc >= t ? acc - t : acc + (p_ - t);
  }
  std::uint64_t Negate(std::uint64_t x) const { return x == 0 ? 0 : p_ - x; }
  static std::uint64_t Zero() { return 0; }

 private:
  std::uint64_t p_;
};

template <class Field>
class SparseEchelon {
 public:
  using T = typename Field::value_type;
  using Row = std::vector<std::pair<std::size_t, T>>;

  SparseEchelon(Field field, std::size_t ncols)
      : field_(std::move(field)),
        ncols_(ncols),
        acc_(ncols, Field::Zero()),
        queued_(ncols, 0),
        row_of_pivot_(ncols, kNone) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  bool HasPivot(std::size_t c) const { return row_of_pivot_[c] != kNone; }

  // Reduces row against the current pivots. A nonzero remainder becomes a new
  // pivot row (leading entry 1) and true is returned.
  bool Insert(const Row& row) {
    Row rem = ReduceAgainstPivots(row, kNone);
    if (rem.empty()) return false;
    T inv = field_.Inverse(rem.front().second);
    for (auto& e : rem) field_.Normalize(e.second, inv);
    std::size_t pc = rem.front().first;
    row_of_pivot_[pc] = rows_.size();
    pivots_.push_back(pc);
    rows_.push_back(std::move(rem));
    return true;
  }

  // Back substitution: returns the reduced echelon rows ordered by pivot.
  std::vector<Row> Reduced() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    for (std::size_t idx : order) {
      Row& r = rows_[idx];
      bool touches_pivot = false;
      for (std::size_t k = 1; k < r.size(); ++k) {
        if (row_of_pivot_[r[k].first] != kNone) {
          touches_pivot = true;
          break;
        }
      }
      if (!touches_pivot) continue;
      Row tail(r.begin() + 1, r.end());
      Row reduced = ReduceAgainstPivots(tail, pivots_[idx]);
      Row out;
      out.reserve(reduced.size() + 1);
      out.push_back(std::move(r.front()));
      for (auto& e : reduced) out.push_back(std::move(e));
      r = std::move(out);
    }
    std::vector<std::size_t> asc(rows_.size());
    for (std::size_t i = 0; i < asc.size(); ++i) asc[i] = i;
    std::sort(asc.begin(), asc.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Row> result;
    result.reserve(rows_.size());
    for (std::size_t i : asc) result.push_back(rows_[i]);
    return result;
  }

  std::vector<std::size_t> SortedPivots() const {
    std::vector<std::size_t> p = pivots_;
    std::sort(p.begin(), p.end());
    return p;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  // Eliminates every pivot column (other than `skip`) from row. Pivot rows
  // only have entries at or right of their pivot, so scanning columns in
  // increasing order terminates.
  Row ReduceAgainstPivots(const Row& row, std::size_t skip) {
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
    for (const auto& [c, v] : row) {
      if (Field::IsZero(v)) continue;
      acc_[c] = v;
      if (!queued_[c]) {
        queued_[c] = 1;
        heap.push(c);
      }
    }
    Row out;
    while (!heap.empty()) {
      std::size_t c = heap.top();
      heap.pop();
      queued_[c] = 0;
      if (Field::IsZero(acc_[c])) continue;
      std::size_t pr = row_of_pivot_[c];
      if (pr == kNone || c == skip) {
        out.emplace_back(c, std::move(acc_[c]));
        acc_[c] = Field::Zero();
        continue;
      }
      T coef = std::move(acc_[c]);
      acc_[c] = Field::Zero();
      const Row& prow = rows_[pr];
      for (std::size_t k = 1; k < prow.size(); ++k) {
        std::size_t c2 = prow[k].first;
        field_.SubMul(acc_[c2], coef, prow[k].second);
        if (!queued_[c2]) {
          queued_[c2] = 1;
          heap.push(c2);
        }
      }
    }
    return out;
  }

  Field field_;
  std::size_t ncols_;
  std::vector<T> acc_;
  std::vector<char> queued_;
  std::vector<std::size_t> row_of_pivot_;
  std::vector<std::size_t> pivots_;
  std::vector<Row> rows_;
};

// Feeds rows in increasing order of length: short rows make cheap pivots.
template <class Field>
void InsertAll(SparseEchelon<Field>& ech,
               const std::vector<typename SparseEchelon<Field>::Row>& rows) {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rows[a].size() < rows[b].size(); });
  for (std::size_t i : order) {
    if (!rows[i].empty()) ech.Insert(rows[i]);
  }
}

}  // namespace deformcx::internal

#endif  // DEFORMCX_SRC_ELIMINATION_H_
