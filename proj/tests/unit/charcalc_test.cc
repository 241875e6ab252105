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

#include <gtest/gtest.h>

#include <random>

#include "deformcx/builtins.h"
#include "deformcx/charcalc.h"
#include "deformcx/errors.h"

namespace deformcx {
namespace {

Character Rank1(std::initializer_list<long> weights) {
  Character c;
  for (long w : weights) c.Add({w});
  return c;
}

TEST(Character, Arithmetic) {
  Character a = Rank1({1, 1, 2});
  Character b = Rank1({1, 3});
  Character d = a - b;
  EXPECT_EQ(d.Multiplicity({1}), 1);
  EXPECT_EQ(d.Multiplicity({3}), -1);
  EXPECT_EQ(d.Degree0(), 1);
  EXPECT_FALSE(d.IsEffective());
  EXPECT_EQ(d + b, a);
  EXPECT_TRUE((a - a).terms().empty());
}

TEST(InducedCharacter, AdjointSl2) {
  InducedCharacters c = InducedCharacter(OperadType::kLie, TorusAction({{2}, {0}, {-2}}));
  EXPECT_EQ(c.aw, Rank1({4, 2, 2, 0, 0, 0, -2, -2, -4}));
  EXPECT_EQ(c.qdual, Rank1({2, 0, -2}));
  EXPECT_EQ(c.g, Rank1({0, 0, 0, 2, 2, -2, -2, 4, -4}));
}

TEST(InducedCharacter, SmallCases) {
  EXPECT_TRUE(InducedCharacter(OperadType::kLie, TorusAction({{1}, {5}})).qdual.terms().empty());
  InducedCharacters a = InducedCharacter(OperadType::kAssoc, TorusAction(std::vector<WeightVector>{{0}}));
  EXPECT_EQ(a.aw, Rank1({0}));
  EXPECT_EQ(a.qdual, Rank1({0}));
  EXPECT_EQ(a.g, Rank1({0}));
  // Comm uses unordered pairs with repetition.
  EXPECT_EQ(InducedCharacter(OperadType::kComm, TorusAction({{0}, {1}})).aw.Degree0(), 6);
}

GradedCohomology Graded(const Law& mu, OperadType type, const TorusAction& t) {
  return ComputeGradedCohomology(
      FiberComplex::Build(mu, QuadraticPresentation::Builtin(type, mu.dim())), t);
}

TEST(GradedCohomology, Sl2AdjointTorus) {
  BuiltinAlgebra b = Builtin("sl2");
  GradedCohomology g = Graded(b.law, b.type, *b.torus);
  EXPECT_EQ(g.h1, Rank1({2, 0, -2}));
  EXPECT_TRUE(g.h2.terms().empty());
  EXPECT_TRUE(g.h3.terms().empty());
}

TEST(GradedCohomology, ZeroLawGivesAmbientCharacters) {
  TorusAction t({{1}, {3}, {-2}});
  Law zero(3, Symmetry::kSkew);
  GradedCohomology g = Graded(zero, OperadType::kLie, t);
  InducedCharacters ind = InducedCharacter(OperadType::kLie, t);
  EXPECT_EQ(g.h2, ind.aw);
  EXPECT_EQ(g.h1, ind.g);
  EXPECT_EQ(g.h3, ind.qdual);
  for (const auto& [w, block] : g.blocks) {
    EXPECT_EQ(block.rank_delta, 0u);
    EXPECT_EQ(block.rank_phi, 0u);
  }
}

TEST(GradedCohomology, BlockTotalsMatchUngraded) {
  for (const auto& name : BuiltinCatalog()) {
    BuiltinAlgebra b = Builtin(name);
    if (!b.torus) continue;
    FiberComplex c = FiberComplex::Build(b.law, QuadraticPresentation::Builtin(b.type, b.law.dim()));
    CohomologyReport r = Cohomology(c);
    GradedCohomology g = ComputeGradedCohomology(c, *b.torus);
    EXPECT_EQ(g.h1.Degree0(), static_cast<long>(r.h1)) << name;
    EXPECT_EQ(g.h2.Degree0(), static_cast<long>(r.h2)) << name;
    EXPECT_EQ(g.h3.Degree0(), static_cast<long>(r.h3)) << name;
  }
}

TEST(GradedCohomology, RejectsTorusNotFixingLaw) {
  BuiltinAlgebra b = Builtin("sl2");
  EXPECT_THROW(Graded(b.law, b.type, TorusAction({{1}, {1}, {1}})), TorusDoesNotFix);
}

TEST(ChIdentity, HoldsForEveryBuiltinTorus) {
  for (const auto& name : BuiltinCatalog()) {
    BuiltinAlgebra b = Builtin(name);
    if (!b.torus) continue;
    for (QdualMode mode : {QdualMode::kAmbient, QdualMode::kSpanOfTheta}) {
      FiberComplex c = FiberComplex::Build(
          b.law, QuadraticPresentation::Builtin(b.type, b.law.dim()), {mode, RankMode::kExact});
      CohomologyReport r = Cohomology(c);
      ChIdentityReport ch = ChIdentityCheck(c, r, *b.torus);
      EXPECT_TRUE(ch.holds) << name;
      EXPECT_EQ(ch.lhs, ch.rhs) << name;
      EXPECT_TRUE(ch.degree0_matches_euler) << name;
      EXPECT_EQ(ch.degree0_lhs, r.euler_lhs) << name;
    }
  }
}

TEST(ChIdentity, ZeroLaw) {
  TorusAction t({{1, 0}, {0, 1}, {1, 1}});
  Law zero(3, Symmetry::kSkew);
  FiberComplex c = FiberComplex::Build(zero, QuadraticPresentation::Builtin(OperadType::kLie, 3));
  ChIdentityReport ch = ChIdentityCheck(c, Cohomology(c), t);
  InducedCharacters ind = InducedCharacter(OperadType::kLie, t);
  EXPECT_TRUE(ch.holds);
  EXPECT_EQ(ch.lhs, ind.qdual);
  EXPECT_EQ(ch.h, ind.g);
}

TEST(GramWeightOrthogonal, BuiltinTori) {
  for (const auto& name : BuiltinCatalog()) {
    BuiltinAlgebra b = Builtin(name);
    if (b.torus) EXPECT_TRUE(GramWeightOrthogonal(b.law, *b.torus)) << name;
  }
}

}  // namespace
}  // namespace deformcx
