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

#include "deformcx/gram.h"

#include <random>

#include "deformcx/errors.h"

namespace deformcx {
namespace {

using Dense = std::vector<RatVector>;

Dense MatMul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

bool IsNilpotent(Dense a) {
  const std::size_t n = a.size();
  Dense p = a;
  for (std::size_t step = 1; step < n; ++step) p = MatMul(p, a);
  for (const auto& row : p) {
    if (!IsZero(row)) return false;
  }
  return true;
}

// Matrix of w -> mu(w, e_j) (right) or w -> mu(e_j, w) (left).
Dense Multiplication(const Law& mu, std::size_t j, bool right) {
  const std::size_t m = mu.dim();
  Dense r(m, RatVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) r[i][k] = right ? mu.c(i, k, j) : mu.c(i, j, k);
  }
  return r;
}

Subspace ProductSpan(const Law& mu, const Subspace& a, const Subspace& b) {
  std::vector<RatVector> products;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      products.push_back(mu.Multiply(a.BasisVector(i), b.BasisVector(j)));
    }
  }
  return Subspace::Span(mu.dim(), products);
}

Subspace Sum(const Subspace& a, const Subspace& b) {
  std::vector<SparseVec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::Span(a.ambient_dim(), std::move(rows));
}

}  // namespace

std::string_view ToString(IdealSource s) {
  switch (s) {
    case IdealSource::kSkewDiagonal:
      return "skew_diagonal";
    case IdealSource::kLeibnizKernel:
      return "leibniz_kernel";
    case IdealSource::kSupplied:
      return "supplied";
    case IdealSource::kNilpotentOperators:
      return "nilpotent_operators";
  }
  return "supplied";
}

GramForm Gram(const Law& mu) {
  const std::size_t m = mu.dim();
  std::vector<RatVector> g(m, RatVector(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = j; l < m; ++l) {
      Rat t = 0;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
          if (sgn(mu.c(i, k, j)) != 0) t += mu.c(i, k, j) * mu.c(k, i, l);
        }
      }
      g[j][l] = t;
      g[l][j] = t;
    }
  }
  GramForm out;
  out.matrix = RatMatrix::FromDense(g, m);
  out.radical = Kernel(out.matrix);
  out.rank = m - out.radical.dim();
  return out;
}

RatMatrix KillingForm(const Law& mu) {
  const std::size_t m = mu.dim();
  std::vector<Dense> ad(m);
  for (std::size_t j = 0; j < m; ++j) ad[j] = Multiplication(mu, j, false);
  std::vector<RatVector> g(m, RatVector(m));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      Dense p = MatMul(ad[x], ad[y]);
      for (std::size_t i = 0; i < m; ++i) g[x][y] += p[i][i];
    }
  }
  return RatMatrix::FromDense(g, m);
}

Subspace LeibnizKernel(const Law& mu) {
  const std::size_t m = mu.dim();
  std::vector<RatVector> gens;
  for (std::size_t j = 0; j < m; ++j) {
    gens.push_back(mu.Product(j, j));
    for (std::size_t k = j + 1; k < m; ++k) gens.push_back(Add(mu.Product(j, k), mu.Product(k, j)));
  }
  return Subspace::Span(m, gens);
}

std::optional<Subspace> DetectNilpotentIdeal(const Law& mu) {
  const std::size_t m = mu.dim();
  std::vector<RatVector> gens;
  for (std::size_t j = 0; j < m; ++j) {
    if (IsNilpotent(Multiplication(mu, j, true)) && IsNilpotent(Multiplication(mu, j, false))) {
      RatVector e(m);
      e[j] = 1;
      gens.push_back(std::move(e));
    }
  }
  Subspace ideal = Subspace::Span(m, gens);
  const Subspace whole = Subspace::Whole(m);
  for (;;) {
    Subspace next = Sum(ideal, Sum(ProductSpan(mu, whole, ideal), ProductSpan(mu, ideal, whole)));
    if (next.dim() == ideal.dim()) break;
    ideal = std::move(next);
  }
  Subspace power = ideal;
  for (std::size_t step = 0; step <= m && power.dim() > 0; ++step) {
    Subspace next = ProductSpan(mu, power, ideal);
    if (next.dim() == power.dim()) return std::nullopt;
    power = std::move(next);
  }
  if (power.dim() > 0) return std::nullopt;
  return ideal;
}

RadicalReport RadicalContainment(const Law& mu, OperadType type,
                                 const std::optional<Subspace>& ideal) {
  if (type == OperadType::kCustom) {
    throw SymmetryMismatch("radical containment needs a builtin operad type");
  }
  RatVector value = IdentityValue(type, mu);
  if (!IsZero(value)) {
    throw NotOnLocus("law does not satisfy the " + std::string(ToString(type)) + " identity",
                     Support(value));
  }
  RadicalReport r;
  r.type = type;
  r.radical = Gram(mu).radical;
  if (ideal) {
    if (ideal->ambient_dim() != mu.dim()) throw DimensionMismatch("ideal ambient dimension");
    r.source = IdealSource::kSupplied;
    r.ideal = *ideal;
  } else if (type == OperadType::kLie) {
    r.source = IdealSource::kSkewDiagonal;
    r.ideal = LeibnizKernel(mu);
  } else if (type == OperadType::kLeib) {
    r.source = IdealSource::kLeibnizKernel;
    r.ideal = LeibnizKernel(mu);
  } else {
    r.source = IdealSource::kNilpotentOperators;
    std::optional<Subspace> detected = DetectNilpotentIdeal(mu);
    r.ideal_verified = detected.has_value();
    r.ideal = detected ? *detected : Subspace::Zero(mu.dim());
  }
  r.contained = r.radical.Contains(r.ideal);
  return r;
}

OrbitConstancyReport GramOrbitConstancy(const Law& mu, std::size_t trials, std::uint64_t seed) {
  OrbitConstancyReport r;
  r.seed = seed;
  r.base_rank = Gram(mu).rank;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t rank = Gram(Act(RandomInvertible(mu.dim(), rng), mu)).rank;
    r.ranks.push_back(rank);
    if (rank != r.base_rank) r.constant = false;
  }
  return r;
}

}  // namespace deformcx
