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

#include "deformcx/errors.h"
#include "deformcx/exactlin.h"
#include "deformcx/modular.h"
#include "support/random.h"

namespace deformcx {
namespace {

using testing::RandomMatrix;
using testing::RandomVector;

RatMatrix M(const std::vector<RatVector>& rows) {
  return RatMatrix::FromDense(rows, rows.empty() ? 0 : rows[0].size());
}

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(ParseRat("6/4"), Rat(3, 2));
  EXPECT_EQ(ParseRat(" -7 "), Rat(-7));
  EXPECT_EQ(ToString(ParseRat("-10/4")), "-5/2");
  EXPECT_THROW(ParseRat("10/-4"), ParseError);
  EXPECT_EQ(ToString(Rat(0)), "0");
  EXPECT_THROW(ParseRat("1/0"), ParseError);
  EXPECT_THROW(ParseRat("abc"), ParseError);
  EXPECT_THROW(ParseRat(""), ParseError);
}

TEST(Rank, SmallCases) {
  EXPECT_EQ(Rank(RatMatrix::Identity(2)), 2u);
  EXPECT_EQ(Rank(RatMatrix(5, 7)), 0u);
  EXPECT_EQ(Rank(M({{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(Rank(M({{1, 2}, {2, 4}}), RankMode::kModular), 1u);
}

TEST(Kernel, SmallCases) {
  EXPECT_EQ(Kernel(RatMatrix::Identity(2)).dim(), 0u);

  Subspace k = Kernel(M({{1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.Contains(RatVector{1, -1}));

  k = Kernel(M({{1, 2}, {2, 4}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.Contains(RatVector{2, -1}));
}

TEST(Solve, ConsistentAndInconsistent) {
  auto x = Solve(RatMatrix::Identity(2), {3, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVector{3, 5}));

  const RatMatrix row = M({{1, 1}});
  x = Solve(row, {2});
  ASSERT_TRUE(x);
  EXPECT_EQ(row.Apply(*x), RatVector{2});

  EXPECT_FALSE(Solve(M({{1}, {2}}), {1, 3}));
  EXPECT_THROW(Solve(row, {1, 2}), DimensionMismatch);
}

TEST(Quotient, Dimensions) {
  EXPECT_EQ(Quotient(Subspace::Whole(2), Subspace::Zero(2)).dim(), 2u);
  EXPECT_EQ(Quotient(Subspace::Whole(3), Subspace::Whole(3)).dim(), 0u);

  QuotientSpace q = Quotient(Subspace::Whole(3), Subspace::Span(3, {RatVector{1, 0, 0}}));
  ASSERT_EQ(q.dim(), 2u);
  for (std::size_t i = 0; i < q.dim(); ++i) EXPECT_EQ(q.Representative(i)[0], 0);
  EXPECT_EQ(q.Reduce(RatVector{7, 2, 3}), (RatVector{2, 3}));
  EXPECT_EQ(q.Lift({2, 3}), (RatVector{0, 2, 3}));
}

TEST(Quotient, RejectsNonNestedSubspaces) {
  Subspace a = Subspace::Span(2, {RatVector{1, 0}});
  Subspace b = Subspace::Span(2, {RatVector{0, 1}});
  EXPECT_THROW(Quotient(a, b), SubspaceNotContained);
}

TEST(Subspace, SpanIsCanonical) {
  Subspace a = Subspace::Span(3, {RatVector{1, 2, 3}, RatVector{0, 1, 1}});
  Subspace b = Subspace::Span(3, {RatVector{1, 3, 4}, RatVector{2, 4, 6}, RatVector{1, 1, 2}});
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.Contains(b));
  EXPECT_FALSE(a.Contains(RatVector{0, 0, 1}));
  const RatVector v{3, 7, 10};
  RatVector coords = a.Coordinates(v);
  RatVector back = ZeroVector(3);
  for (std::size_t i = 0; i < a.dim(); ++i) Axpy(back, coords[i], a.BasisVector(i));
  EXPECT_EQ(back, v);
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a = RandomMatrix(rng, 4, 4);
    auto inv = Inverse(a.ToDense());
    if (Rank(a) < 4) {
      EXPECT_FALSE(inv);
      continue;
    }
    ASSERT_TRUE(inv);
    EXPECT_EQ(a.Multiply(RatMatrix::FromDense(*inv, 4)), RatMatrix::Identity(4));
  }
}

// Rank-nullity, kernel correctness and solver correctness on random input.
TEST(ExactLinProperty, RankNullityKernelAndSolve) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    // Low-rank products exercise nontrivial kernels.
    const std::size_t inner = size(rng);
    RatMatrix a = RandomMatrix(rng, r, inner).Multiply(RandomMatrix(rng, inner, c));
    const std::size_t rank = Rank(a);
    Subspace ker = Kernel(a);
    EXPECT_EQ(rank + ker.dim(), c);
    EXPECT_LE(rank, std::min({r, c, inner}));
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      EXPECT_TRUE(IsZero(a.Apply(ker.BasisVector(i))));
    }
    EXPECT_EQ(Image(a).dim(), rank);
    const RatVector x = RandomVector(rng, c);
    const RatVector b = a.Apply(x);
    auto y = Solve(a, b);
    ASSERT_TRUE(y);
    EXPECT_EQ(a.Apply(*y), b);
  }
}

TEST(Modular, RankMatchesExactOnThousandMatrices) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<std::size_t> size(1, 50);
  const long heights[] = {1, 10, 1000, 1000000};
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    const long h = heights[trial % 4];
    RatMatrix a;
    if (trial % 3 == 0) {
      std::uniform_int_distribution<std::size_t> inner(1, std::min(r, c));
      const std::size_t k = inner(rng);
      a = RandomMatrix(rng, r, k, h).Multiply(RandomMatrix(rng, k, c, 3));
    } else if (trial % 3 == 1) {
      a = RatMatrix::FromDense(
          [&] {
            std::vector<RatVector> rows;
            for (std::size_t i = 0; i < r; ++i) rows.push_back(testing::RandomSparseVector(rng, c, h));
            return rows;
          }(),
          c);
    } else {
      a = RandomMatrix(rng, r, c, h);
    }
    if (Rank(a, RankMode::kExact) != Rank(a, RankMode::kModular)) ++mismatches;
  }
  EXPECT_EQ(mismatches, 0u);
}

TEST(Modular, CertificateRecordsPrimes) {
  RatMatrix a = M({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  modular::RankCertificate cert = modular::CertifiedRank(a);
  EXPECT_EQ(cert.rank, 2u);
  EXPECT_FALSE(cert.primes.empty());
  EXPECT_EQ(cert.primes.size(), cert.prime_ranks.size());
  for (auto p : cert.primes) EXPECT_TRUE(modular::IsPrime(p));
}

TEST(Modular, NotInImage) {
  RatMatrix a = M({{1, 0}, {0, 1}, {0, 0}});
  EXPECT_TRUE(modular::CertifiedNotInImage(a, {0, 0, 1}, 2));
  EXPECT_FALSE(modular::CertifiedNotInImage(a, {5, 7, 0}, 2));
}

TEST(Modular, RationalReconstruction) {
  const BigInt p("1000000007");
  const Rat target(-22, 7);
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), BigInt(7).get_mpz_t(), p.get_mpz_t());
  BigInt residue = (BigInt(-22) * inv) % p;
  if (residue < 0) residue += p;
  auto r = modular::RationalReconstruct(residue, p);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, target);
}

}  // namespace
}  // namespace deformcx
