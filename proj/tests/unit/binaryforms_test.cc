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

#include "deformcx/binaryforms.h"
#include "deformcx/errors.h"
#include "deformcx/incidence.h"
#include "support/random.h"

namespace deformcx {
namespace {

BinForm RandomForm(std::mt19937_64& rng, std::size_t n) {
  return BinForm{n, testing::RandomVector(rng, n + 1)};
}

Sl2Element RandomSl2(std::mt19937_64& rng) {
  return {testing::RandomRat(rng), testing::RandomRat(rng), testing::RandomRat(rng)};
}

TEST(Transvectant, ZerothIsProduct) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    BinForm f = RandomForm(rng, 3), g = RandomForm(rng, 4);
    EXPECT_EQ(Transvectant(f, g, 0), Product(f, g));
  }
}

TEST(Transvectant, OddOrderIsAlternating) {
  std::mt19937_64 rng(2);
  for (std::size_t r : {1u, 3u, 5u}) {
    BinForm f = RandomForm(rng, 6), g = RandomForm(rng, 6);
    EXPECT_TRUE(Transvectant(f, f, r).IsZero());
    EXPECT_EQ(Transvectant(f, g, r), Transvectant(g, f, r) * Rat(-1));
  }
}

TEST(Transvectant, KnownValues) {
  // (x^2, y^2)_2 = f_xx g_yy = 4 in the unnormalized convention.
  EXPECT_EQ(Transvectant(BinForm::Monomial(2, 0), BinForm::Monomial(2, 2), 2).coeffs,
            RatVector{4});
  // (x, y)_1 = f_x g_y - f_y g_x = 1.
  EXPECT_EQ(Transvectant(BinForm::Monomial(1, 0), BinForm::Monomial(1, 1), 1).coeffs,
            RatVector{1});
  EXPECT_THROW(Transvectant(BinForm::Monomial(2, 0), BinForm::Monomial(3, 0), 3), OrderTooHigh);
}

TEST(Sl2, RelationsHold) {
  for (std::size_t n = 0; n <= 14; ++n) EXPECT_TRUE(VerifySl2Relations(n)) << n;
  EXPECT_EQ(Bracket(Sl2Element::E(), Sl2Element::F()), Sl2Element::H());
  EXPECT_EQ(Bracket(Sl2Element::H(), Sl2Element::E()), Sl2Element::E() * 2);
}

TEST(TransvectantProperty, Equivariance) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<std::size_t> deg(0, 8);
    const std::size_t n = deg(rng), m = deg(rng);
    std::uniform_int_distribution<std::size_t> order(0, std::min(n, m));
    const std::size_t r = order(rng);
    BinForm f = RandomForm(rng, n), g = RandomForm(rng, m);
    Sl2Element x = RandomSl2(rng);
    EXPECT_EQ(Sl2Act(x, Transvectant(f, g, r)),
              Transvectant(Sl2Act(x, f), g, r) + Transvectant(f, Sl2Act(x, g), r));
  }
}

TEST(Richardson, LawIsLieWithAbelianModule) {
  for (std::size_t n : {1u, 3u, 7u}) {
    SemidirectLaw s = BuildRichardson(n);
    const std::size_t dim = 2 * n + 4;
    ASSERT_EQ(s.law.dim(), dim);
    EXPECT_TRUE(IsZero(IdentityValue(OperadType::kLie, s.law)));
    for (std::size_t u = 3; u < dim; ++u) {
      for (std::size_t v = 3; v < dim; ++v) EXPECT_TRUE(IsZero(s.law.Product(u, v)));
      for (std::size_t x = 0; x < 3; ++x) {
        RatVector p = s.law.Product(x, u);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(p[i], 0);
      }
    }
  }
}

TEST(PhiCocycle, IsAnAlternatingCocycleOnTheModule) {
  SemidirectLaw s = BuildRichardson(7);
  Law phi = PhiCocycle(7);
  EXPECT_TRUE(phi.SatisfiesSymmetry());
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t u = 0; u < 18; ++u) EXPECT_TRUE(IsZero(phi.Product(x, u)));
  }
  for (std::size_t u = 3; u < 18; ++u) {
    for (std::size_t v = 3; v < 18; ++v) {
      EXPECT_EQ(phi.Product(u, v), Scale(-1, phi.Product(v, u)));
    }
  }
  EXPECT_TRUE(IsZero(CeCoboundary2(s.law, phi)));
  EXPECT_THROW(PhiCocycle(7, 6), EvenOrderNotAlternating);
  EXPECT_THROW(PhiCocycle(7, 5), DimensionMismatch);
}

TEST(Sym2ToSl2, DerivedIdentification) {
  auto t = DeriveSym2ToSl2();
  EXPECT_EQ(t[0], Sl2Element::E());
  EXPECT_EQ(t[1], Sl2Element::H() * Rat(-1, 2));
  EXPECT_EQ(t[2], Sl2Element::F() * Rat(-1));
}

TEST(RatioTest, ReferenceValues) {
  RatioTestResult r = JacobiatorRatioTest();
  EXPECT_EQ(r.r1, kReferenceRatio1);
  EXPECT_EQ(r.r2, kReferenceRatio2);
  EXPECT_EQ(r.quotient, Rat(-13, 20));
  EXPECT_EQ(r.scalar1, 1);
  EXPECT_EQ(r.scalar2, 1);
  EXPECT_TRUE(r.common_scalar);
  EXPECT_TRUE(r.not_proportional);
  // Weight considerations: the two Jacobiators land on v_0 and v_3.
  EXPECT_EQ(r.first.index, 0u);
  EXPECT_EQ(r.second.index, 3u);
  EXPECT_EQ(r.first.jacobiator.SingleSupport(), 0u);
  EXPECT_EQ(r.second.jacobiator.SingleSupport(), 3u);
}

TEST(RatioTest, JacobiatorMatchesDirectEvaluation) {
  RatioTestResult r = JacobiatorRatioTest();
  EXPECT_EQ(r.first.jacobiator, JacobiatorOfTransvectant(BinForm::Monomial(14, 0),
                                                          BinForm::Monomial(14, 1),
                                                          BinForm::Monomial(14, 13), 7));
}

// Phi -> l Phi scales both ratios by l^2; psi -> s psi and the identification
// scale divide both by the same factor. The quotient never moves.
TEST(RatioProperty, QuotientIsScaleInvariant) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    RatioOptions o;
    auto nonzero = [&] {
      Rat q;
      do q = testing::RandomRat(rng, 6, 4); while (q == 0);
      return q;
    };
    o.phi_scale = nonzero();
    o.psi_scale = nonzero();
    o.identification_scale = nonzero();
    RatioTestResult r = JacobiatorRatioTest(o);
    EXPECT_EQ(r.quotient, Rat(-13, 20));
    EXPECT_EQ(r.scalar1, r.scalar2);
  }
}

TEST(NrComparison, MatchesJacobiatorOnModuleTriples) {
  NrComparison c = CompareNrSquareWithJacobiator(7);
  EXPECT_TRUE(c.mixed_vanish);
  EXPECT_TRUE(c.m_triples_match);
  EXPECT_EQ(c.m_triples, 455u);  // C(15, 3)
  EXPECT_GT(c.mixed_triples, 0u);
}

TEST(RichardsonAnisotropy, FastPipeline) {
  RichardsonReport r = RichardsonAnisotropy(RichardsonMode::kFast);
  EXPECT_TRUE(r.ratios.not_proportional);
  EXPECT_EQ(r.verdict.kind, VerdictKind::kCertifiedAnisotropic);
  EXPECT_EQ(r.verdict.reason, CertificateReason::kDim1NonzeroForm);
  EXPECT_TRUE(r.conditional);
}

}  // namespace
}  // namespace deformcx
