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

#include "deformcx/presentations.h"

#include <map>
#include <string>

#include "deformcx/errors.h"

namespace deformcx {
namespace {

struct Entry {
  std::size_t i, j, k;
  Rat v;
};

// Structure constants of a coordinate vector, with mirrored entries, indexed
// by output and by each input slot.
struct IndexedLaw {
  std::vector<Entry> entries;
  std::vector<std::vector<std::size_t>> by_output, by_first, by_second;

  IndexedLaw(const LawBasis& basis, const RatVector& coords)
      : by_output(basis.m()), by_first(basis.m()), by_second(basis.m()) {
    for (std::size_t idx = 0; idx < coords.size(); ++idx) {
      if (sgn(coords[idx]) == 0) continue;
      auto [i, j, k] = basis.Triple(idx);
      entries.push_back({i, j, k, coords[idx]});
      if (j != k && basis.symmetry() == Symmetry::kSymmetric) entries.push_back({i, k, j, coords[idx]});
      if (j != k && basis.symmetry() == Symmetry::kSkew) entries.push_back({i, k, j, -coords[idx]});
    }
    for (std::size_t e = 0; e < entries.size(); ++e) {
      by_output[entries[e].i].push_back(e);
      by_first[entries[e].j].push_back(e);
      by_second[entries[e].k].push_back(e);
    }
  }
};

class IdentityAccumulator {
 public:
  IdentityAccumulator(OperadType type, std::size_t m) : type_(type), m_(m) {}

  // Contribution of a(b(x,y),z) at (i, x, y, z).
  void Left(std::size_t i, std::size_t x, std::size_t y, std::size_t z, const Rat& v) {
    switch (type_) {
      case OperadType::kLie: {
        if (x == y || y == z || x == z) return;
        // Jacobiator coordinate (sorted triple) collects its three cyclic
        // rotations; odd orderings are covered by their skew partners.
        if (x < y && y < z) {
          Add(IdentityIndex(type_, m_, i, x, y, z), v);
        } else if (y < z && z < x) {
          Add(IdentityIndex(type_, m_, i, y, z, x), v);
        } else if (z < x && x < y) {
          Add(IdentityIndex(type_, m_, i, z, x, y), v);
        }
        return;
      }
      case OperadType::kLeib:
        Add(IdentityIndex(type_, m_, i, x, y, z), v);
        Add(IdentityIndex(type_, m_, i, x, z, y), -v);
        return;
      default:
        Add(IdentityIndex(type_, m_, i, x, y, z), v);
        return;
    }
  }

  // Contribution of a(x, b(y,z)) at (i, x, y, z).
  void Right(std::size_t i, std::size_t x, std::size_t y, std::size_t z, const Rat& v) {
    if (type_ == OperadType::kLie) return;
    Add(IdentityIndex(type_, m_, i, x, y, z), -v);
  }

  SparseVec Take(const Rat& scale) {
    SparseVec out;
    for (auto& [idx, v] : acc_) {
      if (sgn(v) != 0) out.emplace_back(idx, v * scale);
    }
    acc_.clear();
    return out;
  }

 private:
  void Add(std::size_t idx, const Rat& v) { acc_[idx] += v; }

  OperadType type_;
  std::size_t m_;
  std::map<std::size_t, Rat> acc_;
};

// Accumulates G(a, b) + G(b, a) where G(a, b) is the identity with the outer
// operation a and inner operation b.
void AccumulateSymmetrized(const IndexedLaw& a, const IndexedLaw& b, IdentityAccumulator& acc) {
  for (int pass = 0; pass < 2; ++pass) {
    const IndexedLaw& outer = pass == 0 ? a : b;
    const IndexedLaw& inner = pass == 0 ? b : a;
    // Iterate the smaller side.
    if (inner.entries.size() <= outer.entries.size()) {
      for (const Entry& in : inner.entries) {
        // outer(inner(x,y), z): inner output feeds outer's first slot.
        for (std::size_t e : outer.by_first[in.i]) {
          const Entry& out = outer.entries[e];
          acc.Left(out.i, in.j, in.k, out.k, out.v * in.v);
        }
        // outer(x, inner(y,z)): inner output feeds outer's second slot.
        for (std::size_t e : outer.by_second[in.i]) {
          const Entry& out = outer.entries[e];
          acc.Right(out.i, out.j, in.j, in.k, out.v * in.v);
        }
      }
    } else {
      for (const Entry& out : outer.entries) {
        for (std::size_t e : inner.by_output[out.j]) {
          const Entry& in = inner.entries[e];
          acc.Left(out.i, in.j, in.k, out.k, out.v * in.v);
        }
        for (std::size_t e : inner.by_output[out.k]) {
          const Entry& in = inner.entries[e];
          acc.Right(out.i, out.j, in.j, in.k, out.v * in.v);
        }
      }
    }
  }
}

const Rat kHalf(1, 2);

}  // namespace

std::string_view ToString(QdualMode mode) {
  return mode == QdualMode::kAmbient ? "ambient" : "span";
}

QdualMode ParseQdualMode(std::string_view s) {
  if (s == "ambient") return QdualMode::kAmbient;
  if (s == "span") return QdualMode::kSpanOfTheta;
  throw ParseError("unknown qdual mode '" + std::string(s) + "'");
}

QuadraticPresentation QuadraticPresentation::Builtin(OperadType type, std::size_t m) {
  if (type == OperadType::kCustom) {
    throw SymmetryMismatch("Builtin: custom presentations need an explicit tensor");
  }
  QuadraticPresentation p;
  p.type_ = type;
  p.m_ = m;
  p.symmetry_ = LawSymmetryFor(type);
  p.ambient_dim_ = LawBasis(m, p.symmetry_).size();
  p.target_dim_ = IdentitySpaceDim(type, m);
  return p;
}

SparseVec QuadraticPresentation::Theta(const RatVector& a, const RatVector& b) const {
  if (a.size() != ambient_dim_ || b.size() != ambient_dim_) {
    throw DimensionMismatch("Theta: expected coordinates of length " +
                            std::to_string(ambient_dim_));
  }
  if (type_ == OperadType::kCustom) {
    std::map<std::size_t, Rat> acc;
    for (std::size_t p = 0; p < ambient_dim_; ++p) {
      if (sgn(a[p]) == 0) continue;
      for (const auto& [q, c, v] : by_p_[p]) {
        if (sgn(b[q]) != 0) acc[c] += v * a[p] * b[q];
      }
    }
    SparseVec out;
    for (auto& [c, v] : acc) {
      if (sgn(v) != 0) out.emplace_back(c, std::move(v));
    }
    return out;
  }
  LawBasis basis(m_, symmetry_);
  IndexedLaw la(basis, a);
  IndexedLaw lb(basis, b);
  IdentityAccumulator acc(type_, m_);
  AccumulateSymmetrized(la, lb, acc);
  return acc.Take(kHalf);
}

SparseVec QuadraticPresentation::Theta(const Law& a, const Law& b) const {
  return Theta(a.Coords(), b.Coords());
}

RatVector QuadraticPresentation::ThetaDense(const RatVector& a, const RatVector& b) const {
  return ToDense(Theta(a, b), target_dim_);
}

std::vector<SparseVec> QuadraticPresentation::ThetaColumns(const RatVector& a) const {
  if (a.size() != ambient_dim_) throw DimensionMismatch("ThetaColumns: coordinate length");
  std::vector<SparseVec> cols(ambient_dim_);
  if (type_ == OperadType::kCustom) {
    RatVector e(ambient_dim_);
    for (std::size_t p = 0; p < ambient_dim_; ++p) {
      e[p] = 1;
      cols[p] = Theta(a, e);
      e[p] = 0;
    }
    return cols;
  }
  LawBasis basis(m_, symmetry_);
  IndexedLaw la(basis, a);
  IdentityAccumulator acc(type_, m_);
  RatVector e(ambient_dim_);
  for (std::size_t p = 0; p < ambient_dim_; ++p) {
    e[p] = 1;
    IndexedLaw lp(basis, e);
    e[p] = 0;
    AccumulateSymmetrized(la, lp, acc);
    cols[p] = acc.Take(kHalf);
  }
  return cols;
}

std::vector<TensorEntry> QuadraticPresentation::Tensor() const {
  std::vector<TensorEntry> out;
  if (type_ == OperadType::kCustom) {
    for (std::size_t p = 0; p < ambient_dim_; ++p) {
      for (const auto& [q, c, v] : by_p_[p]) out.push_back({c, p, q, v});
    }
    return out;
  }
  RatVector ep(ambient_dim_), eq(ambient_dim_);
  for (std::size_t p = 0; p < ambient_dim_; ++p) {
    ep[p] = 1;
    for (std::size_t q = p; q < ambient_dim_; ++q) {
      eq[q] = 1;
      for (auto& [c, v] : Theta(ep, eq)) {
        out.push_back({c, p, q, v});
        if (p != q) out.push_back({c, q, p, v});
      }
      eq[q] = 0;
    }
    ep[p] = 0;
  }
  return out;
}

QdualMode QuadraticPresentation::DefaultQdualMode() const {
  if (type_ == OperadType::kLie) return QdualMode::kAmbient;
  return ambient_dim_ <= kSpanOfThetaLimit ? QdualMode::kSpanOfTheta : QdualMode::kAmbient;
}

QuadraticPresentation CustomPresentation(std::vector<TensorEntry> entries,
                                         std::size_t ambient_dim, std::size_t target_dim) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rat> b;
  for (auto& e : entries) {
    if (e.a >= target_dim || e.p >= ambient_dim || e.q >= ambient_dim) {
      throw DimensionMismatch("CustomPresentation: tensor index out of range");
    }
    if (sgn(e.value) == 0) continue;
    b[{e.a, e.p, e.q}] += e.value;
  }
  // A single-order off-diagonal entry is the coefficient of the monomial
  // nu_p nu_q and is split evenly; pairs listed in both orders must agree.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rat> full = b;
  for (const auto& [key, v] : b) {
    auto [a, p, q] = key;
    if (p == q) continue;
    auto it = b.find({a, q, p});
    if (it == b.end()) {
      full[{a, p, q}] = v / 2;
      full[{a, q, p}] = v / 2;
    } else if (it->second != v) {
      throw AsymmetricTensor("CustomPresentation: B[" + std::to_string(a) + "][" +
                             std::to_string(p) + "][" + std::to_string(q) +
                             "] differs from its transpose");
    }
  }
  QuadraticPresentation out;
  out.type_ = OperadType::kCustom;
  out.ambient_dim_ = ambient_dim;
  out.target_dim_ = target_dim;
  out.by_p_.resize(ambient_dim);
  for (auto& [key, v] : full) {
    auto [a, p, q] = key;
    if (sgn(v) != 0) out.by_p_[p].emplace_back(q, a, v);
  }
  return out;
}

QuadraticPresentation CustomPresentationForLaws(std::vector<TensorEntry> entries, std::size_t m,
                                                Symmetry symmetry, std::size_t target_dim) {
  QuadraticPresentation out =
      CustomPresentation(std::move(entries), LawBasis(m, symmetry).size(), target_dim);
  out.m_ = m;
  out.symmetry_ = symmetry;
  return out;
}

QdualSpace Qdual(const QuadraticPresentation& p, QdualMode mode) {
  QdualSpace q;
  q.mode = mode;
  if (mode == QdualMode::kAmbient) {
    q.space = Subspace::Whole(p.target_dim());
    return q;
  }
  if (p.ambient_dim() > kSpanOfThetaLimit) {
    throw SpanTooLarge("Qdual: span model needs ambient_dim <= " +
                       std::to_string(kSpanOfThetaLimit) + ", got " +
                       std::to_string(p.ambient_dim()));
  }
  std::vector<SparseVec> values;
  RatVector ep(p.ambient_dim());
  for (std::size_t i = 0; i < p.ambient_dim(); ++i) {
    ep[i] = 1;
    std::vector<SparseVec> cols = p.ThetaColumns(ep);
    for (std::size_t j = i; j < p.ambient_dim(); ++j) {
      if (!cols[j].empty()) values.push_back(std::move(cols[j]));
    }
    ep[i] = 0;
  }
  q.space = Subspace::Span(p.target_dim(), std::move(values));
  return q;
}

}  // namespace deformcx
