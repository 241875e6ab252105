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

// Acceptance runner: one PASS/FAIL line per criterion. With --only ACn a
// single criterion runs; the exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deformcx/binaryforms.h"
#include "deformcx/builtins.h"
#include "deformcx/charcalc.h"
#include "deformcx/gram.h"
#include "deformcx/incidence.h"
#include "deformcx/obstruction.h"

namespace deformcx {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> run;
};

FiberComplex Complex(const Law& mu, OperadType type, std::optional<QdualMode> mode = {}) {
  return FiberComplex::Build(mu, QuadraticPresentation::Builtin(type, mu.dim()),
                             {mode, RankMode::kExact});
}

RatVector RandomCombination(std::mt19937_64& rng, const Subspace& s) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  RatVector v = ZeroVector(s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) Axpy(v, Rat(coeff(rng)), s.BasisVector(i));
  return v;
}

EndW RandomEnd(std::mt19937_64& rng, std::size_t m) {
  std::uniform_int_distribution<long> coeff(-3, 3);
  EndW x(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) x(r, c) = coeff(rng);
  }
  return x;
}

void Ac1(Outcome& o) {
  RichardsonReport r = RichardsonAnisotropy(RichardsonMode::kFast);
  o.Require(r.ratios.quotient == Rat(-13, 20), "quotient");
  o.detail << "r1/r2 = " << ToString(r.ratios.quotient);
}

void Ac2(Outcome& o) {
  RatioTestResult r = JacobiatorRatioTest();
  o.Require(r.r1 == kReferenceRatio1, "r1");
  o.Require(r.r2 == kReferenceRatio2, "r2");
  o.Require(r.common_scalar && r.scalar1 == 1, "common scalar 1");
  o.detail << "(r1, r2) = (" << ToString(r.r1) << ", " << ToString(r.r2)
           << "), convention scalar " << ToString(r.scalar1);
}

void Ac3(Outcome& o) {
  RichardsonReport r = RichardsonAnisotropy(RichardsonMode::kFull);
  o.Require(r.h2 == 1, "dim H^2 = 1");
  o.Require(r.verdict.kind == VerdictKind::kCertifiedAnisotropic &&
                r.verdict.reason == CertificateReason::kDim1NonzeroForm,
            "CertifiedAnisotropic(Dim1NonzeroForm)");
  o.Require(r.phi_in_kernel && r.phi_not_coboundary, "phi spans H^2");
  o.Require(r.euler_lhs == r.euler_rhs, "Euler");
  o.detail << "dim L = " << r.dim_law << ", H = (" << r.h1 << ", " << r.h2 << ", " << r.h3
           << "), verdict " << ToString(r.verdict.kind) << "(" << ToString(r.verdict.reason) << ")";
}

void Ac4(Outcome& o) {
  std::size_t algebras = 0, checks = 0;
  std::set<OperadType> types;
  for (const auto& name : BuiltinCatalog()) {
    BuiltinAlgebra b = Builtin(name);
    for (QdualMode mode : {QdualMode::kAmbient, QdualMode::kSpanOfTheta}) {
      CohomologyReport r = Cohomology(Complex(b.law, b.type, mode));
      o.Require(r.euler_lhs == r.euler_rhs, name + " " + std::string(ToString(mode)));
      ++checks;
    }
    types.insert(b.type);
    ++algebras;
  }
  o.Require(algebras >= 12, "at least 12 algebras");
  o.Require(types.size() == 4, "all four operadic types");
  o.detail << algebras << " algebras, " << types.size() << " types, " << checks << " checks";
}

void Ac5(Outcome& o) {
  std::mt19937_64 rng(0x5eed2026ULL);
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // trials, failures
  auto record = [&](const std::string& prop, bool ok) {
    auto& t = tally[prop];
    ++t.first;
    if (!ok) ++t.second;
  };
  const std::vector<std::string> names = {"sl2", "aff1", "heis3", "gl2",   "kx2",
                                          "kx3", "ut2",  "leib2", "k_split(2)", "kx2_comm"};

  for (int trial = 0; trial < 500; ++trial) {
    BuiltinAlgebra b = Builtin(names[trial % names.size()]);
    Law mu = Act(RandomInvertible(b.law.dim(), rng), b.law);
    FiberComplex c = Complex(mu, b.type);
    record("phi_delta_zero", c.phi().Multiply(c.delta()).IsZero());
  }

  for (int trial = 0; trial < 150; ++trial) {
    BuiltinAlgebra b = Builtin(names[trial % names.size()]);
    const std::size_t m = b.law.dim();
    FiberComplex c = Complex(b.law, b.type);
    CohomologyReport r = Cohomology(c);
    const QuadraticPresentation& p = c.presentation();
    RatVector alpha = RandomCombination(rng, c.KernelPhi());
    EndW xi = RandomEnd(rng, m);
    RatVector shifted = Add(alpha, c.Delta(xi));
    record("kappa_representative_independence",
           ObstructionClass(c, r, shifted) == ObstructionClass(c, r, alpha));
    RatVector cross = p.ThetaDense(c.Delta(xi), alpha);
    record("cross_term_in_image",
           cross == Scale(-1, c.Phi(InfAct(xi, Law::FromCoords(m, b.law.symmetry(), alpha)))) &&
               c.ImagePhi().Contains(cross));
    LiftResult l = SecondOrderLift(c, r, alpha);
    bool lift_ok = l.lifted == IsZero(ObstructionClass(c, r, alpha));
    if (l.lifted) {
      for (const auto& coeff : l.truncated_coefficients) lift_ok = lift_ok && IsZero(coeff);
    }
    record("lift_iff_class_vanishes", lift_ok);
    Law nu = Law::FromCoords(m, b.law.symmetry(), RandomCombination(rng, Subspace::Whole(p.ambient_dim())));
    record("polarization_diagonal", p.F(nu.Coords()) == IdentityValue(b.type, nu));

    EndW g = RandomInvertible(m, rng);
    RatMatrix before = Gram(b.law).matrix;
    GramForm moved = Gram(Act(g, b.law));
    bool entrywise = true;
    for (std::size_t v = 0; v < m; ++v) {
      for (std::size_t w = 0; w < m; ++w) {
        RatVector ev(m), ew(m);
        ev[v] = 1;
        ew[w] = 1;
        entrywise = entrywise && Dot(g.Apply(ev), moved.matrix.Apply(g.Apply(ew))) == before.At(v, w);
      }
    }
    record("gram_equivariance", entrywise);
    record("gram_rank_orbit_constancy", moved.rank == Gram(b.law).rank);
  }

  std::size_t total = 0;
  for (const auto& [prop, t] : tally) {
    o.Require(t.first >= 100, prop + " has fewer than 100 trials");
    o.Require(t.second == 0, prop);
    total += t.first;
  }
  o.detail << tally.size() << " properties, " << total << " exact trials, 0 failures";
  if (!o.pass) o.detail << " (see failures above)";
}

void Ac6(Outcome& o) {
  for (const char* name : {"sl2", "aff1"}) {
    BuiltinAlgebra b = Builtin(name);
    o.Require(Cohomology(Complex(b.law, b.type)).h2 == 0, std::string(name) + " H^2 = 0");
  }
  BuiltinAlgebra kx2 = Builtin("kx2");
  FiberComplex c = Complex(kx2.law, kx2.type);
  CohomologyReport r = Cohomology(c);
  o.Require(r.h2 > 0, "k[x]/(x^2) H^2 != 0");
  AnisotropyVerdict v = Anisotropy(Kappa2(c, r));
  o.Require(v.kind == VerdictKind::kIsotropicWitness && v.field == WitnessField::kRational,
            "rational isotropic witness");
  if (v.kind == VerdictKind::kIsotropicWitness && v.field == WitnessField::kRational) {
    LiftResult l = SecondOrderLift(c, r, r.h2_space.Lift(v.witness));
    bool vanishes = l.lifted;
    for (const auto& coeff : l.truncated_coefficients) vanishes = vanishes && IsZero(coeff);
    o.Require(vanishes, "lift verified mod t^3");
  }
  o.detail << "H^2(sl2) = H^2(aff1) = 0; H^2(k[x]/(x^2)) = " << r.h2
           << ", witness lifts mod t^3";
}

void Ac7(Outcome& o) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"sl2", 3}, {"heis3", 0}, {"k_split(2)", 2}, {"kx2", 1}};
  for (const auto& [name, rank] : expected) {
    std::size_t got = Gram(Builtin(name).law).rank;
    o.Require(got == rank, name);
    o.detail << name << "=" << got << " ";
  }
  std::size_t l7 = Gram(BuildRichardson(7).law).rank;
  o.Require(l7 == 3, "L7");
  o.detail << "L7=" << l7;
  RadicalReport leib = RadicalContainment(Builtin("leib2").law, OperadType::kLeib);
  o.Require(leib.ideal.dim() > 0 && leib.contained, "Leib(L) in rad");
  o.detail << "; Leib(L) (dim " << leib.ideal.dim() << ") in rad";
}

void Ac8(Outcome& o) {
  std::size_t count = 0;
  for (const auto& name : BuiltinCatalog()) {
    BuiltinAlgebra b = Builtin(name);
    if (b.type != OperadType::kLie || b.law.dim() > 4) continue;
    FiberComplex c = Complex(b.law, b.type);
    auto [d1, d2] = CeTruncation(b.law);
    o.Require(Kernel(d2) == c.KernelPhi(), name + " ker d2");
    o.Require(Image(d1) == c.ImageDelta(), name + " im d1");
    ++count;
  }
  o.Require(count >= 5, "enough Lie algebras");
  o.detail << count << " Lie algebras of dim <= 4";
}

void Ac9(Outcome& o) {
  BuiltinAlgebra sl2 = Builtin("sl2");
  std::vector<std::pair<Law, TorusAction>> cases = {{sl2.law, *sl2.torus}};
  for (const auto& w : std::vector<std::vector<WeightVector>>{
           {{1}, {2}, {3}}, {{0}, {0}, {0}}, {{1, 0}, {0, 1}, {1, 1}}, {{2}, {0}, {-2}}}) {
    cases.emplace_back(Law(3, Symmetry::kSkew), TorusAction(w));
  }
  for (const auto& [mu, t] : cases) {
    FiberComplex c = Complex(mu, OperadType::kLie);
    CohomologyReport r = Cohomology(c);
    ChIdentityReport ch = ChIdentityCheck(c, r, t);
    o.Require(ch.holds && ch.lhs == ch.rhs, "virtual character identity");
    o.Require(ch.degree0_lhs == r.euler_lhs && ch.degree0_rhs == r.euler_rhs,
              "degree-0 shadow equals Euler integers");
  }
  o.detail << cases.size() << " (law, torus) pairs";
}

void Ac10(Outcome& o) {
  // mu_t = g_t^{-1} . mu_sl2 with g_t = diag(t, t^2, t) on (e, h, f):
  // [e,f] = h, [h,e] = 2t^2 e, [h,f] = -2t^2 f, the Heisenberg law at t = 0.
  Law sl2 = Builtin("sl2").law;
  auto family = [&](const Rat& t) {
    Law mu(3, Symmetry::kSkew);
    mu.Set(1, 0, 2, 1);
    mu.Set(0, 1, 0, 2 * t * t);
    mu.Set(2, 1, 2, -2 * t * t);
    return mu;
  };
  auto ranks = [&](const Law& mu) {
    FiberComplex c = Complex(mu, OperadType::kLie);
    return std::make_pair(c.RankDelta(), c.RankPhi());
  };
  const auto base = ranks(family(0));
  bool transported = true;
  std::vector<std::pair<std::size_t, std::size_t>> generic;
  for (const Rat& t : {Rat(1), Rat(1, 2), Rat(1, 3)}) {
    Law mu = family(t);
    EndW g = EndW::Diagonal({t, t * t, t});
    transported = transported && Act(g.Inverse(), sl2) == mu;
    generic.push_back(ranks(mu));
  }
  o.Require(transported, "family is conjugate to sl2");
  o.Require(Cohomology(Complex(family(0), OperadType::kLie)).h1 ==
                Cohomology(Complex(Builtin("heis3").law, OperadType::kLie)).h1,
            "t = 0 is Heisenberg");
  for (const auto& g : generic) {
    o.Require(g == generic.front(), "ranks constant for t != 0");
    o.Require(g.first >= base.first && g.second >= base.second, "semicontinuity");
  }
  o.detail << "rank(delta, Phi) = (" << generic.front().first << ", " << generic.front().second
           << ") at t = 1, 1/2, 1/3; (" << base.first << ", " << base.second << ") at t = 0";
}

}  // namespace
}  // namespace deformcx

int main(int argc, char** argv) {
  using deformcx::Criterion;
  std::string only;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--only ACn]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria = {
      {"AC1", "Richardson ratio quotient", 5, deformcx::Ac1},
      {"AC2", "Richardson exact ratios and convention scalar", 5, deformcx::Ac2},
      {"AC3", "Richardson full pipeline", 900, deformcx::Ac3},
      {"AC4", "Euler identity on every builtin, both Q* models", 30, deformcx::Ac4},
      {"AC5", "Randomized property suite", 600, deformcx::Ac5},
      {"AC6", "Rigidity spot checks", 60, deformcx::Ac6},
      {"AC7", "Gram stratification", 60, deformcx::Ac7},
      {"AC8", "CE comparison", 60, deformcx::Ac8},
      {"AC9", "Character identity", 10, deformcx::Ac9},
      {"AC10", "Semicontinuity along the sl2 -> h3 contraction", 60, deformcx::Ac10},
  };
  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && c.id != only) continue;
    ++ran;
    deformcx::Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail << " [over the " << c.budget_seconds << " s budget]";
    }
    std::cout << c.id << (o.pass ? " PASS " : " FAIL ") << c.title << ": " << o.detail.str()
              << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)" << std::endl;
    if (!o.pass) ++failures;
  }
  if (ran == 0) {
    std::cerr << "unknown criterion " << only << "\n";
    return 2;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
