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

#include "deformcx/laws.h"

#include <map>
#include <string>

#include "deformcx/errors.h"

namespace deformcx {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t Choose3(std::size_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

// Rank of j < k < l among increasing triples of {0..m-1}, lexicographic.
std::size_t TripleRank(std::size_t m, std::size_t j, std::size_t k, std::size_t l) {
  std::size_t rank = 0;
  for (std::size_t a = 0; a < j; ++a) {
    std::size_t rest = m - a - 1;
    rank += rest * (rest - 1) / 2;
  }
  for (std::size_t b = j + 1; b < k; ++b) rank += m - b - 1;
  rank += l - k - 1;
  return rank;
}

void RequireSymmetry(OperadType t, const Law& mu) {
  if (t == OperadType::kCustom) {
    throw SymmetryMismatch("IdentityValue: custom presentations have no builtin identity");
  }
  if (mu.symmetry() != LawSymmetryFor(t)) {
    throw SymmetryMismatch(std::string("law symmetry '") + std::string(ToString(mu.symmetry())) +
                           "' does not match operad '" + std::string(ToString(t)) + "'");
  }
}

}  // namespace

std::string_view ToString(Symmetry s) {
  switch (s) {
    case Symmetry::kNone:
      return "none";
    case Symmetry::kSymmetric:
      return "symmetric";
    case Symmetry::kSkew:
      return "skew";
  }
  return "none";
}

Symmetry ParseSymmetry(std::string_view s) {
  if (s == "none") return Symmetry::kNone;
  if (s == "symmetric") return Symmetry::kSymmetric;
  if (s == "skew") return Symmetry::kSkew;
  throw ParseError("unknown symmetry '" + std::string(s) + "'");
}

std::string_view ToString(OperadType t) {
  switch (t) {
    case OperadType::kAssoc:
      return "assoc";
    case OperadType::kComm:
      return "comm";
    case OperadType::kLie:
      return "lie";
    case OperadType::kLeib:
      return "leib";
    case OperadType::kCustom:
      return "custom";
  }
  return "custom";
}

OperadType ParseOperadType(std::string_view s) {
  if (s == "assoc") return OperadType::kAssoc;
  if (s == "comm") return OperadType::kComm;
  if (s == "lie") return OperadType::kLie;
  if (s == "leib") return OperadType::kLeib;
  if (s == "custom") return OperadType::kCustom;
  throw ParseError("unknown operad type '" + std::string(s) + "'");
}

Symmetry LawSymmetryFor(OperadType t) {
  switch (t) {
    case OperadType::kLie:
      return Symmetry::kSkew;
    case OperadType::kComm:
      return Symmetry::kSymmetric;
    default:
      return Symmetry::kNone;
  }
}

// ----------------------------------------------------------------- LawBasis

LawBasis::LawBasis(std::size_t m, Symmetry symmetry)
    : m_(m), symmetry_(symmetry), pair_index_(m * m, kNone) {
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      bool free = symmetry == Symmetry::kNone || (symmetry == Symmetry::kSkew && j < k) ||
                  (symmetry == Symmetry::kSymmetric && j <= k);
      if (!free) continue;
      pair_index_[j * m + k] = pairs_.size();
      pairs_.emplace_back(j, k);
    }
  }
}

LawIndex LawBasis::Triple(std::size_t index) const {
  if (index >= size()) throw DimensionMismatch("LawBasis::Triple: index out of range");
  const auto& [j, k] = pairs_[index % pairs_.size()];
  return {index / pairs_.size(), j, k};
}

std::size_t LawBasis::Index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= m_ || j >= m_ || k >= m_) throw DimensionMismatch("LawBasis::Index: out of range");
  std::size_t slot = pair_index_[j * m_ + k];
  if (slot == kNone) throw SymmetryMismatch("LawBasis::Index: (j, k) is not a free pair");
  return i * pairs_.size() + slot;
}

// --------------------------------------------------------------------- Law

Law::Law(std::size_t m, Symmetry symmetry) : m_(m), symmetry_(symmetry), c_(m * m * m) {}

Law Law::FromCoords(std::size_t m, Symmetry symmetry, const RatVector& coords) {
  LawBasis basis(m, symmetry);
  if (coords.size() != basis.size()) {
    throw DimensionMismatch("Law::FromCoords: expected " + std::to_string(basis.size()) +
                            " coordinates, got " + std::to_string(coords.size()));
  }
  Law mu(m, symmetry);
  for (std::size_t idx = 0; idx < coords.size(); ++idx) {
    if (sgn(coords[idx]) == 0) continue;
    LawIndex t = basis.Triple(idx);
    mu.Set(t.i, t.j, t.k, coords[idx]);
  }
  return mu;
}

void Law::Set(std::size_t i, std::size_t j, std::size_t k, const Rat& value) {
  if (i >= m_ || j >= m_ || k >= m_) throw DimensionMismatch("Law::Set: index out of range");
  auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> Rat& {
    return c_[(a * m_ + b) * m_ + c];
  };
  switch (symmetry_) {
    case Symmetry::kNone:
      at(i, j, k) = value;
      break;
    case Symmetry::kSymmetric:
      at(i, j, k) = value;
      at(i, k, j) = value;
      break;
    case Symmetry::kSkew:
      if (j == k) {
        if (sgn(value) != 0) throw SymmetryMismatch("skew law with nonzero diagonal entry");
        break;
      }
      at(i, j, k) = value;
      at(i, k, j) = -value;
      break;
  }
}

RatVector Law::Multiply(const RatVector& x, const RatVector& y) const {
  if (x.size() != m_ || y.size() != m_) throw DimensionMismatch("Law::Multiply: length");
  RatVector out(m_);
  for (std::size_t j = 0; j < m_; ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t k = 0; k < m_; ++k) {
      if (sgn(y[k]) == 0) continue;
      Rat xy = x[j] * y[k];
      for (std::size_t i = 0; i < m_; ++i) {
        const Rat& cc = c(i, j, k);
        if (sgn(cc) != 0) out[i] += cc * xy;
      }
    }
  }
  return out;
}

RatVector Law::Product(std::size_t j, std::size_t k) const {
  RatVector out(m_);
  for (std::size_t i = 0; i < m_; ++i) out[i] = c(i, j, k);
  return out;
}

RatVector Law::Coords() const {
  LawBasis basis(m_, symmetry_);
  RatVector out(basis.size());
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    LawIndex t = basis.Triple(idx);
    out[idx] = c(t.i, t.j, t.k);
  }
  return out;
}

bool Law::IsZero() const {
  for (const auto& x : c_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

bool Law::SatisfiesSymmetry() const {
  if (symmetry_ == Symmetry::kNone) return true;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = 0; j < m_; ++j) {
      for (std::size_t k = 0; k < m_; ++k) {
        if (symmetry_ == Symmetry::kSymmetric && c(i, j, k) != c(i, k, j)) return false;
        if (symmetry_ == Symmetry::kSkew && c(i, j, k) != -c(i, k, j)) return false;
      }
    }
  }
  return true;
}

Law Law::WithSymmetry(Symmetry target) const {
  Law out = *this;
  out.symmetry_ = target;
  if (!out.SatisfiesSymmetry()) {
    throw SymmetryMismatch("law constants are not " + std::string(ToString(target)));
  }
  return out;
}

// --------------------------------------------------------------------- EndW

EndW EndW::Identity(std::size_t m) {
  EndW g(m);
  for (std::size_t i = 0; i < m; ++i) g(i, i) = 1;
  return g;
}

EndW EndW::Elementary(std::size_t m, std::size_t a, std::size_t b) {
  EndW g(m);
  g(a, b) = 1;
  return g;
}

EndW EndW::Diagonal(const std::vector<Rat>& d) {
  EndW g(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
  return g;
}

EndW EndW::FromRows(const std::vector<RatVector>& rows) {
  EndW g(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw DimensionMismatch("EndW::FromRows: not square");
    for (std::size_t c = 0; c < rows.size(); ++c) g(r, c) = rows[r][c];
  }
  return g;
}

RatVector EndW::Apply(const RatVector& x) const {
  if (x.size() != m_) throw DimensionMismatch("EndW::Apply: length");
  RatVector y(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    for (std::size_t c = 0; c < m_; ++c) {
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
    }
  }
  return y;
}

EndW EndW::operator*(const EndW& other) const {
  if (m_ != other.m_) throw DimensionMismatch("EndW::operator*: size");
  EndW out(m_);
  for (std::size_t r = 0; r < m_; ++r) {
    for (std::size_t k = 0; k < m_; ++k) {
      if (sgn((*this)(r, k)) == 0) continue;
      for (std::size_t c = 0; c < m_; ++c) out(r, c) += (*this)(r, k) * other(k, c);
    }
  }
  return out;
}

EndW EndW::operator+(const EndW& other) const {
  if (m_ != other.m_) throw DimensionMismatch("EndW::operator+: size");
  EndW out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += other.a_[i];
  return out;
}

std::vector<RatVector> EndW::Rows() const {
  std::vector<RatVector> rows(m_, RatVector(m_));
  for (std::size_t r = 0; r < m_; ++r) {
    for (std::size_t c = 0; c < m_; ++c) rows[r][c] = (*this)(r, c);
  }
  return rows;
}

EndW EndW::Inverse() const {
  auto inv = deformcx::Inverse(Rows());
  if (!inv) throw SingularGroupElement("group element is not invertible");
  return FromRows(*inv);
}

bool EndW::IsInvertible() const { return Rank(RatMatrix::FromDense(Rows(), m_)) == m_; }

// -------------------------------------------------------------- group action

Law Act(const EndW& g, const Law& mu) {
  const std::size_t m = mu.dim();
  if (g.dim() != m) throw DimensionMismatch("Act: group element size");
  if (!g.IsInvertible()) throw SingularGroupElement("Act: group element is singular");
  EndW h = g.Inverse();
  // t1[a][b][k] = sum_c c(a,b,c) h(c,k)
  std::vector<Rat> t1(m * m * m), t2(m * m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        const Rat& x = mu.c(a, b, c);
        if (sgn(x) == 0) continue;
        for (std::size_t k = 0; k < m; ++k) {
          if (sgn(h(c, k)) != 0) t1[(a * m + b) * m + k] += x * h(c, k);
        }
      }
    }
  }
  // t2[a][j][k] = sum_b t1[a][b][k] h(b,j)
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < m; ++k) {
        const Rat& x = t1[(a * m + b) * m + k];
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (sgn(h(b, j)) != 0) t2[(a * m + j) * m + k] += x * h(b, j);
        }
      }
    }
  }
  std::vector<Rat> out(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      if (sgn(g(i, a)) == 0) continue;
      for (std::size_t jk = 0; jk < m * m; ++jk) {
        const Rat& x = t2[a * m * m + jk];
        if (sgn(x) != 0) out[i * m * m + jk] += g(i, a) * x;
      }
    }
  }
  Law result(m, mu.symmetry());
  LawBasis basis(m, mu.symmetry());
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    LawIndex t = basis.Triple(idx);
    result.Set(t.i, t.j, t.k, out[(t.i * m + t.j) * m + t.k]);
  }
  return result;
}

RatVector InfAct(const EndW& xi, const Law& mu) {
  const std::size_t m = mu.dim();
  if (xi.dim() != m) throw DimensionMismatch("InfAct: endomorphism size");
  LawBasis basis(m, mu.symmetry());
  RatVector out(basis.size());
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    auto [i, j, k] = basis.Triple(idx);
    Rat v = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if (sgn(xi(i, a)) != 0 && sgn(mu.c(a, j, k)) != 0) v += xi(i, a) * mu.c(a, j, k);
      if (sgn(xi(a, j)) != 0 && sgn(mu.c(i, a, k)) != 0) v -= mu.c(i, a, k) * xi(a, j);
      if (sgn(xi(a, k)) != 0 && sgn(mu.c(i, j, a)) != 0) v -= mu.c(i, j, a) * xi(a, k);
    }
    out[idx] = v;
  }
  return out;
}

RatMatrix DeltaMatrix(const Law& mu) {
  const std::size_t m = mu.dim();
  LawBasis basis(m, mu.symmetry());
  // Assembled from the three terms of InfAct rather than m^2 dense calls.
  std::vector<SparseVec> columns(m * m);
  std::vector<std::map<std::size_t, Rat>> acc(m * m);
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    auto [i, j, k] = basis.Triple(idx);
    for (std::size_t a = 0; a < m; ++a) {
      // xi = E_{i a}: xi(i, a) = 1
      if (sgn(mu.c(a, j, k)) != 0) acc[i * m + a][idx] += mu.c(a, j, k);
      // xi = E_{a j}: xi(a, j) = 1
      if (sgn(mu.c(i, a, k)) != 0) acc[a * m + j][idx] -= mu.c(i, a, k);
      // xi = E_{a k}
      if (sgn(mu.c(i, j, a)) != 0) acc[a * m + k][idx] -= mu.c(i, j, a);
    }
  }
  for (std::size_t col = 0; col < m * m; ++col) {
    for (auto& [r, v] : acc[col]) {
      if (sgn(v) != 0) columns[col].emplace_back(r, std::move(v));
    }
  }
  return RatMatrix::FromColumns(basis.size(), columns);
}

// --------------------------------------------------------- identity values

std::size_t IdentitySpaceDim(OperadType t, std::size_t m) {
  if (t == OperadType::kLie) return m * Choose3(m);
  return m * m * m * m;
}

std::size_t IdentityIndex(OperadType t, std::size_t m, std::size_t i, std::size_t j,
                          std::size_t k, std::size_t l) {
  if (t == OperadType::kLie) {
    if (!(j < k && k < l && l < m) || i >= m) {
      throw DimensionMismatch("IdentityIndex: Lie coordinates need j < k < l");
    }
    return i * Choose3(m) + TripleRank(m, j, k, l);
  }
  return ((i * m + j) * m + k) * m + l;
}

RatVector IdentityValue(OperadType t, const Law& mu) {
  RequireSymmetry(t, mu);
  const std::size_t m = mu.dim();
  RatVector out(IdentitySpaceDim(t, m));
  // mu(mu(e_x, e_y), e_z)
  auto left = [&](std::size_t x, std::size_t y, std::size_t z) {
    RatVector ez(m);
    ez[z] = 1;
    return mu.Multiply(mu.Product(x, y), ez);
  };
  // mu(e_x, mu(e_y, e_z))
  auto right = [&](std::size_t x, std::size_t y, std::size_t z) {
    RatVector ex(m);
    ex[x] = 1;
    return mu.Multiply(ex, mu.Product(y, z));
  };
  if (t == OperadType::kLie) {
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = x + 1; y < m; ++y) {
        for (std::size_t z = y + 1; z < m; ++z) {
          RatVector v = Add(Add(left(x, y, z), left(y, z, x)), left(z, x, y));
          for (std::size_t i = 0; i < m; ++i) out[IdentityIndex(t, m, i, x, y, z)] = v[i];
        }
      }
    }
    return out;
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        RatVector v;
        if (t == OperadType::kLeib) {
          v = Sub(Sub(left(x, y, z), left(x, z, y)), right(x, y, z));
        } else {
          v = Sub(left(x, y, z), right(x, y, z));
        }
        for (std::size_t i = 0; i < m; ++i) out[IdentityIndex(t, m, i, x, y, z)] = v[i];
      }
    }
  }
  return out;
}

EndW RandomInvertible(std::size_t m, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    EndW g(m);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) g(r, c) = dist(rng);
    }
    if (g.IsInvertible()) return g;
  }
}

}  // namespace deformcx
