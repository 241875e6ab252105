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
#include "deformcx/errors.h"
#include "deformcx/incidence.h"
#include "deformcx/modular.h"
#include "support/random.h"

namespace deformcx {
namespace {

using testing::RandomLaw;

CohomologyReport CohomologyOf(const std::string& name, std::optional<QdualMode> mode = {}) {
  BuiltinAlgebra b = Builtin(name);
  auto p = QuadraticPresentation::Builtin(b.type, b.law.dim());
  return Cohomology(FiberComplex::Build(b.law, p, {mode, RankMode::kExact}));
}

TEST(FiberComplex, ZeroLawHasZeroMaps) {
  for (OperadType t : {OperadType::kLie, OperadType::kAssoc, OperadType::kComm, OperadType::kLeib}) {
    Law zero(3, LawSymmetryFor(t));
    FiberComplex c = FiberComplex::Build(zero, QuadraticPresentation::Builtin(t, 3));
    EXPECT_TRUE(c.delta().IsZero());
    EXPECT_TRUE(c.phi().IsZero());
  }
}

TEST(FiberComplex, PhiDeltaVanishesOnSl2Basis) {
  BuiltinAlgebra b = Builtin("sl2");
  FiberComplex c = FiberComplex::Build(b.law, QuadraticPresentation::Builtin(b.type, 3));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t bb = 0; bb < 3; ++bb) {
      EXPECT_TRUE(IsZero(c.Phi(c.Delta(EndW::Elementary(3, a, bb)))));
    }
  }
}

TEST(FiberComplex, OffLocusThrowsWithSupport) {
  std::mt19937_64 rng(4);
  Law mu = RandomLaw(rng, 3, Symmetry::kSkew);
  try {
    FiberComplex::Build(mu, QuadraticPresentation::Builtin(OperadType::kLie, 3));
    FAIL() << "expected NotOnLocus";
  } catch (const NotOnLocus& e) {
    EXPECT_FALSE(e.nonzero_coordinates().empty());
  }
}

TEST(FiberComplex, IncompatiblePresentationThrows) {
  EXPECT_THROW(FiberComplex::Build(Law(3, Symmetry::kSkew),
                                   QuadraticPresentation::Builtin(OperadType::kLie, 2)),
               DimensionMismatch);
  EXPECT_THROW(FiberComplex::Build(Law(2, Symmetry::kNone),
                                   QuadraticPresentation::Builtin(OperadType::kLie, 2)),
               SymmetryMismatch);
}

TEST(Cohomology, ReferenceDimensions) {
  struct Case {
    const char* name;
    std::size_t h1, h2, h3;
  };
  for (const Case& c : {Case{"abelian(2)", 4, 2, 0}, Case{"sl2", 3, 0, 0}, Case{"aff1", 2, 0, 0},
                        Case{"so3", 3, 0, 0}, Case{"abelian(3)", 9, 9, 3}}) {
    CohomologyReport r = CohomologyOf(c.name);
    EXPECT_EQ(r.h1, c.h1) << c.name;
    EXPECT_EQ(r.h2, c.h2) << c.name;
    EXPECT_EQ(r.h3, c.h3) << c.name;
  }
}

TEST(Cohomology, EulerIdentityForEveryBuiltinInBothModes) {
  for (const auto& name : BuiltinCatalog()) {
    for (QdualMode mode : {QdualMode::kAmbient, QdualMode::kSpanOfTheta}) {
      CohomologyReport r = CohomologyOf(name, mode);
      EXPECT_EQ(r.euler_lhs, r.euler_rhs) << name << " " << ToString(mode);
      EXPECT_EQ(r.h1, r.dim_g - r.rank_delta);
      EXPECT_EQ(r.h2, r.dim_aw - r.rank_phi - r.rank_delta);
      EXPECT_EQ(r.h3, r.dim_qdual - r.rank_phi);
    }
  }
}

TEST(Cohomology, QdualModeLeavesH2Unchanged) {
  for (const auto& name : BuiltinCatalog()) {
    EXPECT_EQ(CohomologyOf(name, QdualMode::kAmbient).h2,
              CohomologyOf(name, QdualMode::kSpanOfTheta).h2)
        << name;
  }
}

TEST(Cohomology, ModularRanksAgree) {
  for (const auto& name : BuiltinCatalog()) {
    BuiltinAlgebra b = Builtin(name);
    auto p = QuadraticPresentation::Builtin(b.type, b.law.dim());
    CohomologyReport exact = Cohomology(FiberComplex::Build(b.law, p, {{}, RankMode::kExact}));
    CohomologyReport mod = Cohomology(FiberComplex::Build(b.law, p, {{}, RankMode::kModular}));
    EXPECT_EQ(exact.rank_delta, mod.rank_delta) << name;
    EXPECT_EQ(exact.rank_phi, mod.rank_phi) << name;
  }
}

TEST(Cohomology, DimensionsInvariantUnderTransport) {
  BuiltinAlgebra b = Builtin("sl2");
  Law moved = Act(EndW::Diagonal({1, 2, 3}), b.law);
  auto p = QuadraticPresentation::Builtin(b.type, 3);
  CohomologyReport r0 = Cohomology(FiberComplex::Build(b.law, p));
  CohomologyReport r1 = Cohomology(FiberComplex::Build(moved, p));
  EXPECT_EQ(r0.h1, r1.h1);
  EXPECT_EQ(r0.h2, r1.h2);
  EXPECT_EQ(r0.h3, r1.h3);
}

TEST(IncidenceProperty, PhiDeltaZeroOnTransportedBuiltins) {
  std::mt19937_64 rng(500);
  const std::vector<std::string> names = {"sl2",  "so3",  "aff1", "heis3",      "gl2",
                                          "kx2",  "kx3",  "ut2",  "k_split(2)", "m2",
                                          "kx2_comm", "leib2", "sl2_leib"};
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    BuiltinAlgebra b = Builtin(names[trial % names.size()]);
    EndW g = RandomInvertible(b.law.dim(), rng);
    Law mu = Act(g, b.law);
    FiberComplex c = FiberComplex::Build(mu, QuadraticPresentation::Builtin(b.type, mu.dim()));
    EXPECT_TRUE(c.phi().Multiply(c.delta()).IsZero()) << b.name;
    ++checked;
  }
  EXPECT_EQ(checked, 500);
}

// The CE differentials and the incidence maps agree as subspaces.
TEST(CeTruncation, MatchesIncidenceMapsForSmallLieAlgebras) {
  for (const char* name : {"abelian(2)", "abelian(3)", "sl2", "so3", "aff1", "heis3", "gl2"}) {
    BuiltinAlgebra b = Builtin(name);
    ASSERT_LE(b.law.dim(), 4u);
    FiberComplex c = FiberComplex::Build(b.law, QuadraticPresentation::Builtin(b.type, b.law.dim()));
    auto [d1, d2] = CeTruncation(b.law);
    EXPECT_EQ(Kernel(d2), c.KernelPhi()) << name;
    EXPECT_EQ(Image(d1), c.ImageDelta()) << name;
    EXPECT_EQ(Kernel(d1), c.KernelDelta()) << name;
  }
}

TEST(CeTruncation, RequiresLie) {
  EXPECT_THROW(CeTruncation(Builtin("kx2").law), NotLie);
}

TEST(NrHalfSquare, IsTheJacobiator) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    Law a = RandomLaw(rng, 4, Symmetry::kSkew);
    EXPECT_EQ(NrHalfSquare(a), IdentityValue(OperadType::kLie, a));
  }
}

TEST(RankProfile, References) {
  auto lie3 = QuadraticPresentation::Builtin(OperadType::kLie, 3);
  RankProfile zero = ComputeRankProfile(Law(3, Symmetry::kSkew), lie3);
  EXPECT_EQ(zero.rank_delta, 0u);
  EXPECT_EQ(zero.rank_phi, 0u);
  EXPECT_EQ(zero.gram_rank, 0u);

  RankProfile sl2 = ComputeRankProfile(Builtin("sl2").law, lie3);
  EXPECT_EQ(sl2.rank_delta, 6u);
  EXPECT_EQ(sl2.rank_phi, 3u);
  EXPECT_EQ(sl2.gram_rank, 3u);

  // Der(h3) computed directly: derivations are the kernel of delta.
  Law h3 = Builtin("heis3").law;
  RankProfile heis = ComputeRankProfile(h3, lie3);
  EXPECT_EQ(heis.rank_delta, 9u - Kernel(DeltaMatrix(h3)).dim());
  EXPECT_EQ(heis.rank_delta, 3u);
}

}  // namespace
}  // namespace deformcx
