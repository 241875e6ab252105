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

#include "deformcx/charcalc.h"

#include <string>

#include "deformcx/errors.h"
#include "deformcx/gram.h"

namespace deformcx {
namespace {

WeightVector Combine(const WeightVector& plus, std::initializer_list<const WeightVector*> minus) {
  WeightVector w = plus;
  for (const WeightVector* x : minus) {
    for (std::size_t s = 0; s < w.size(); ++s) w[s] -= (*x)[s];
  }
  return w;
}

std::vector<WeightVector> LawWeights(const TorusAction& t, const LawBasis& basis) {
  std::vector<WeightVector> out(basis.size());
  for (std::size_t p = 0; p < basis.size(); ++p) out[p] = t.OfLawCoord(basis, p);
  return out;
}

std::vector<WeightVector> IdentityWeights(const TorusAction& t, OperadType type) {
  const std::size_t m = t.m();
  std::vector<WeightVector> out(IdentitySpaceDim(type, m));
  const auto& w = t.weights();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          if (type == OperadType::kLie && !(j < k && k < l)) continue;
          out[IdentityIndex(type, m, i, j, k, l)] = Combine(w[i], {&w[j], &w[k], &w[l]});
        }
      }
    }
  }
  return out;
}

Character CharacterOf(const std::vector<WeightVector>& weights) {
  Character c;
  for (const auto& w : weights) c.Add(w);
  return c;
}

Character CharacterOfSubspace(const Subspace& s, const std::vector<WeightVector>& coord_weights) {
  Character c;
  for (const auto& v : s.basis()) c.Add(HomogeneousWeight(v, coord_weights));
  return c;
}

// Columns of m with weight w, restricted to rows of weight w. Entries
// outside those rows mean the map does not preserve weights.
RatMatrix Block(const RatMatrix& m, const std::vector<WeightVector>& row_w,
                const std::vector<WeightVector>& col_w, const WeightVector& w) {
  std::vector<std::size_t> rows, cols;
  std::vector<std::size_t> row_slot(row_w.size(), static_cast<std::size_t>(-1));
  for (std::size_t r = 0; r < row_w.size(); ++r) {
    if (row_w[r] == w) {
      row_slot[r] = rows.size();
      rows.push_back(r);
    }
  }
  for (std::size_t c = 0; c < col_w.size(); ++c) {
    if (col_w[c] == w) cols.push_back(c);
  }
  std::vector<bool> wanted(col_w.size(), false);
  std::vector<std::size_t> col_slot(col_w.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    wanted[cols[i]] = true;
    col_slot[cols[i]] = i;
  }
  RatMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseVec row;
    for (const auto& [c, v] : m.Row(r)) {
      if (!wanted[c]) continue;
      if (row_slot[r] == static_cast<std::size_t>(-1)) {
        throw TorusDoesNotFix("a differential mixes torus weights");
      }
      row.emplace_back(col_slot[c], v);
    }
    if (!row.empty()) out.SetRow(row_slot[r], std::move(row));
  }
  return out;
}

}  // namespace

void Character::Add(const WeightVector& w, long multiplicity) {
  if (multiplicity == 0) return;
  long& slot = terms_[w];
  slot += multiplicity;
  if (slot == 0) terms_.erase(w);
}

long Character::Multiplicity(const WeightVector& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

long Character::Degree0() const {
  long total = 0;
  for (const auto& [w, n] : terms_) total += n;
  return total;
}

bool Character::IsEffective() const {
  for (const auto& [w, n] : terms_) {
    if (n < 0) return false;
  }
  return true;
}

Character Character::operator+(const Character& o) const {
  Character out = *this;
  for (const auto& [w, n] : o.terms_) out.Add(w, n);
  return out;
}

Character Character::operator-(const Character& o) const {
  Character out = *this;
  for (const auto& [w, n] : o.terms_) out.Add(w, -n);
  return out;
}

TorusAction::TorusAction(std::vector<WeightVector> weights) : weights_(std::move(weights)) {
  rank_ = weights_.empty() ? 0 : weights_[0].size();
  for (const auto& w : weights_) {
    if (w.size() != rank_) throw DimensionMismatch("torus weights have different lengths");
  }
}

EndW TorusAction::Generator(std::size_t s) const {
  std::vector<Rat> d;
  for (const auto& w : weights_) d.emplace_back(w.at(s));
  return EndW::Diagonal(d);
}

bool TorusAction::Fixes(const Law& mu) const {
  if (mu.dim() != m()) throw DimensionMismatch("torus and law dimensions differ");
  for (std::size_t s = 0; s < rank_; ++s) {
    if (!IsZero(InfAct(Generator(s), mu))) return false;
  }
  return true;
}

WeightVector TorusAction::OfEndW(std::size_t a, std::size_t b) const {
  return Combine(weights_.at(a), {&weights_.at(b)});
}

WeightVector TorusAction::OfLawCoord(const LawBasis& basis, std::size_t index) const {
  LawIndex x = basis.Triple(index);
  return Combine(weights_.at(x.i), {&weights_.at(x.j), &weights_.at(x.k)});
}

WeightVector TorusAction::OfIdentityCoord(OperadType type, std::size_t index) const {
  return IdentityWeights(*this, type).at(index);
}

InducedCharacters InducedCharacter(OperadType type, const TorusAction& t) {
  if (type == OperadType::kCustom) {
    throw SymmetryMismatch("induced characters need a builtin operad type");
  }
  InducedCharacters out;
  out.aw = CharacterOf(LawWeights(t, LawBasis(t.m(), LawSymmetryFor(type))));
  out.qdual = CharacterOf(IdentityWeights(t, type));
  for (std::size_t a = 0; a < t.m(); ++a) {
    for (std::size_t b = 0; b < t.m(); ++b) out.g.Add(t.OfEndW(a, b));
  }
  return out;
}

WeightVector HomogeneousWeight(const SparseVec& v, const std::vector<WeightVector>& coord_weights) {
  if (v.empty()) throw VerificationFailure("weight of the zero vector");
  const WeightVector& w = coord_weights.at(v.front().first);
  for (const auto& [i, x] : v) {
    if (coord_weights.at(i) != w) throw VerificationFailure("vector is not torus-homogeneous");
  }
  return w;
}

GradedCohomology ComputeGradedCohomology(const FiberComplex& c, const TorusAction& t) {
  const QuadraticPresentation& p = c.presentation();
  if (p.type() == OperadType::kCustom) {
    throw SymmetryMismatch("graded cohomology needs a builtin operad type");
  }
  if (!t.Fixes(c.mu())) throw TorusDoesNotFix("the torus does not fix mu");
  const std::size_t m = t.m();

  std::vector<WeightVector> g_w(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) g_w[a * m + b] = t.OfEndW(a, b);
  }
  std::vector<WeightVector> aw_w = LawWeights(t, c.mu().basis());
  std::vector<WeightVector> v_w = IdentityWeights(t, p.type());

  GradedCohomology out;
  out.g = CharacterOf(g_w);
  out.aw = CharacterOf(aw_w);
  out.qdual = c.qdual().mode == QdualMode::kAmbient ? CharacterOf(v_w)
                                                     : CharacterOfSubspace(c.qdual().space, v_w);

  Character all = out.g + out.aw + out.qdual;
  std::size_t total_delta = 0, total_phi = 0;
  for (const auto& [w, n] : all.terms()) {
    WeightBlock b;
    b.dim_g = static_cast<std::size_t>(out.g.Multiplicity(w));
    b.dim_aw = static_cast<std::size_t>(out.aw.Multiplicity(w));
    b.dim_qdual = static_cast<std::size_t>(out.qdual.Multiplicity(w));
    if (b.dim_g > 0) b.rank_delta = Rank(Block(c.delta(), aw_w, g_w, w), c.rank_mode());
    if (b.dim_aw > 0) b.rank_phi = Rank(Block(c.phi(), v_w, aw_w, w), c.rank_mode());
    b.h1 = b.dim_g - b.rank_delta;
    b.h2 = b.dim_aw - b.rank_phi - b.rank_delta;
    b.h3 = b.dim_qdual - b.rank_phi;
    total_delta += b.rank_delta;
    total_phi += b.rank_phi;
    out.h1.Add(w, static_cast<long>(b.h1));
    out.h2.Add(w, static_cast<long>(b.h2));
    out.h3.Add(w, static_cast<long>(b.h3));
    out.blocks.emplace(w, b);
  }
  if (total_delta != c.RankDelta() || total_phi != c.RankPhi()) {
    throw VerificationFailure("blockwise ranks do not add up to the ungraded ranks");
  }
  return out;
}

ChIdentityReport ChIdentityCheck(const FiberComplex& c, const CohomologyReport& report,
                                 const TorusAction& t) {
  GradedCohomology graded = ComputeGradedCohomology(c, t);
  const std::size_t m = t.m();
  std::vector<WeightVector> g_w(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) g_w[a * m + b] = t.OfEndW(a, b);
  }
  std::vector<WeightVector> aw_w = LawWeights(t, c.mu().basis());

  ChIdentityReport r;
  r.h = CharacterOfSubspace(report.derivations, g_w);
  Subspace reps = Subspace::Span(c.dim_aw(), report.h2_space.representatives());
  r.h2_from_representatives = CharacterOfSubspace(reps, aw_w);
  r.lhs = graded.h3;
  r.rhs = graded.qdual - graded.aw + graded.g - r.h + r.h2_from_representatives;
  r.holds = r.lhs == r.rhs && r.h == graded.h1 && r.h2_from_representatives == graded.h2;
  r.degree0_lhs = (r.h - r.h2_from_representatives + r.lhs).Degree0();
  r.degree0_rhs = (graded.g - graded.aw + graded.qdual).Degree0();
  r.degree0_matches_euler = r.degree0_lhs == report.euler_lhs && r.degree0_rhs == report.euler_rhs;
  return r;
}

bool GramWeightOrthogonal(const Law& mu, const TorusAction& t) {
  if (!t.Fixes(mu)) throw TorusDoesNotFix("the torus does not fix mu");
  GramForm g = Gram(mu);
  for (std::size_t a = 0; a < mu.dim(); ++a) {
    for (const auto& [b, v] : g.matrix.Row(a)) {
      WeightVector sum = t.weights()[a];
      for (std::size_t s = 0; s < sum.size(); ++s) sum[s] += t.weights()[b][s];
      for (long x : sum) {
        if (x != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace deformcx
