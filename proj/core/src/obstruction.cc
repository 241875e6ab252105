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

#include "deformcx/obstruction.h"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <sstream>

#include "deformcx/errors.h"

namespace deformcx {
namespace {

// Polynomials over Q in one variable, coefficients low to high.
using Poly = RatVector;

void Trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly PolyRem(Poly a, const Poly& b) {
  Trim(a);
  while (a.size() >= b.size()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    Trim(a);
  }
  return a;
}

Poly PolyGcd(Poly a, Poly b) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = PolyRem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

bool IsSquare(const Rat& q, Rat* root) {
  if (sgn(q) < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  if (root) {
    BigInt n = sqrt(q.get_num());
    BigInt d = sqrt(q.get_den());
    *root = Rat(n, d);
    root->canonicalize();
  }
  return true;
}

std::string Join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

// Forms scaled to primitive integer matrices; zero forms dropped.
struct IntegerForms {
  std::size_t d = 0;
  std::vector<std::vector<BigInt>> forms;  // row-major d x d
  bool fits64 = true;
  std::vector<std::vector<std::int64_t>> small;
};

IntegerForms ToIntegerForms(const QuadraticObstruction& k) {
  IntegerForms out;
  out.d = k.h2_dim;
  for (const auto& form : k.forms) {
    BigInt lcm = 1;
    bool nonzero = false;
    for (const auto& row : form) {
      for (const auto& x : row) {
        if (sgn(x) != 0) nonzero = true;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
      }
    }
    if (!nonzero) continue;
    std::vector<BigInt> ints;
    BigInt content = 0;
    for (const auto& row : form) {
      for (const auto& x : row) {
        BigInt v = x.get_num() * (lcm / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
      }
    }
    std::vector<std::int64_t> small;
    for (auto& v : ints) {
      v /= content;
      if (!v.fits_slong_p() || abs(v) > BigInt(1) << 40) out.fits64 = false;
      small.push_back(v.fits_slong_p() ? v.get_si() : 0);
    }
    out.forms.push_back(std::move(ints));
    out.small.push_back(std::move(small));
  }
  return out;
}

bool IntegerZero(const IntegerForms& f, const std::vector<std::int64_t>& t) {
  const std::size_t d = f.d;
  for (std::size_t c = 0; c < f.forms.size(); ++c) {
    if (f.fits64) {
      __int128 acc = 0;
      const auto& q = f.small[c];
      for (std::size_t i = 0; i < d; ++i) {
        if (t[i] == 0) continue;
        __int128 row = 0;
        for (std::size_t j = 0; j < d; ++j) row += static_cast<__int128>(q[i * d + j]) * t[j];
        acc += row * t[i];
      }
      if (acc != 0) return false;
    } else {
      BigInt acc = 0;
      const auto& q = f.forms[c];
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) acc += q[i * d + j] * t[i] * t[j];
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

bool ModularZero(const std::vector<std::vector<std::int64_t>>& forms_mod_p, std::size_t d,
                 std::int64_t p, const std::vector<std::int64_t>& t) {
  for (const auto& q : forms_mod_p) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (t[i] == 0) continue;
      std::int64_t row = 0;
      for (std::size_t j = 0; j < d; ++j) row = (row + q[i * d + j] * t[j]) % p;
      acc = (acc + row * t[i]) % p;
    }
    if (acc != 0) return false;
  }
  return true;
}

RatVector ToRat(const std::vector<std::int64_t>& t) {
  RatVector out;
  for (auto x : t) out.emplace_back(static_cast<long>(x));
  return out;
}

// Iterates over nonzero vectors in [-b, b]^d whose first nonzero entry is
// positive. Stops early when visit returns true.
bool ForEachBoxPoint(std::size_t d, std::int64_t b,
                     const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> t(d, -b);
  for (;;) {
    std::size_t first = 0;
    while (first < d && t[first] == 0) ++first;
    if (first < d && t[first] > 0 && visit(t)) return true;
    std::size_t i = 0;
    while (i < d && t[i] == b) t[i++] = -b;
    if (i == d) return false;
    ++t[i];
  }
}

// Projective points over F_p, normalized with first nonzero entry 1.
bool ForEachProjectivePoint(std::size_t d, std::int64_t p,
                            const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  for (std::size_t lead = 0; lead < d; ++lead) {
    std::vector<std::int64_t> t(d, 0);
    t[lead] = 1;
    for (;;) {
      if (visit(t)) return true;
      std::size_t i = lead + 1;
      while (i < d && t[i] == p - 1) t[i++] = 0;
      if (i >= d) break;
      ++t[i];
    }
  }
  return false;
}

std::uint64_t ProjectiveCount(std::size_t d, std::uint64_t p, std::uint64_t cap) {
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += power;
    if (total > cap) return cap + 1;
    if (power > cap) return cap + 1;
    power *= p;
  }
  return total;
}

}  // namespace

std::string_view ToString(VerdictKind k) {
  switch (k) {
    case VerdictKind::kCertifiedAnisotropic:
      return "CertifiedAnisotropic";
    case VerdictKind::kIsotropicWitness:
      return "IsotropicWitness";
    case VerdictKind::kHeuristicAnisotropic:
      return "HeuristicAnisotropic";
  }
  return "";
}

std::string_view ToString(CertificateReason r) {
  switch (r) {
    case CertificateReason::kNone:
      return "none";
    case CertificateReason::kVacuousH2Zero:
      return "VacuousH2Zero";
    case CertificateReason::kDim1NonzeroForm:
      return "Dim1NonzeroForm";
    case CertificateReason::kDim2GcdCertificate:
      return "Dim2GcdCertificate";
  }
  return "";
}

std::string_view ToString(WitnessField f) {
  switch (f) {
    case WitnessField::kRational:
      return "rational";
    case WitnessField::kQuadraticExtension:
      return "quadratic_extension";
    case WitnessField::kFiniteField:
      return "finite_field";
  }
  return "";
}

RatVector ObstructionClass(const FiberComplex& c, const CohomologyReport& report,
                           const RatVector& alpha) {
  return report.h3_space.Reduce(c.presentation().Theta(alpha, alpha));
}

QuadraticObstruction Kappa2(const FiberComplex& c, const CohomologyReport& report) {
  QuadraticObstruction k;
  k.h2_dim = report.h2;
  k.h3_dim = report.h3;
  for (std::size_t i = 0; i < k.h2_dim; ++i) {
    k.representatives.push_back(report.h2_space.Representative(i));
  }
  k.forms.assign(k.h3_dim, std::vector<RatVector>(k.h2_dim, RatVector(k.h2_dim)));
  for (std::size_t i = 0; i < k.h2_dim; ++i) {
    for (std::size_t j = i; j < k.h2_dim; ++j) {
      RatVector b = report.h3_space.Reduce(
          c.presentation().Theta(k.representatives[i], k.representatives[j]));
      for (std::size_t e = 0; e < k.h3_dim; ++e) {
        k.forms[e][i][j] = b[e];
        k.forms[e][j][i] = b[e];
      }
    }
  }
  return k;
}

RatVector EvaluateForms(const QuadraticObstruction& k, const RatVector& t) {
  if (t.size() != k.h2_dim) throw DimensionMismatch("EvaluateForms: wrong H^2 coordinate count");
  RatVector out(k.h3_dim);
  for (std::size_t e = 0; e < k.h3_dim; ++e) {
    for (std::size_t i = 0; i < k.h2_dim; ++i) {
      if (sgn(t[i]) == 0) continue;
      Rat row = 0;
      for (std::size_t j = 0; j < k.h2_dim; ++j) row += k.forms[e][i][j] * t[j];
      out[e] += t[i] * row;
    }
  }
  return out;
}

RatVector Kappa2Direct(const FiberComplex& c, const CohomologyReport& report, const RatVector& t) {
  return ObstructionClass(c, report, report.h2_space.Lift(t));
}

std::vector<RatVector> LiftPolynomial(const FiberComplex& c, const RatVector& alpha,
                                      const RatVector& beta) {
  const QuadraticPresentation& p = c.presentation();
  const Law& mu = c.mu();
  const RatVector base = mu.Coords();
  std::vector<RatVector> values;
  for (long t = 0; t <= 4; ++t) {
    RatVector point = base;
    Axpy(point, t, alpha);
    Axpy(point, t * t, beta);
    if (p.type() == OperadType::kCustom) {
      values.push_back(p.F(point));
    } else {
      values.push_back(
          IdentityValue(p.type(), Law::FromCoords(mu.dim(), mu.symmetry(), point)));
    }
  }
  // Inverse Vandermonde on nodes 0..4.
  std::vector<RatVector> vander(5, RatVector(5));
  for (long t = 0; t <= 4; ++t) {
    Rat power = 1;
    for (std::size_t k = 0; k < 5; ++k) {
      vander[t][k] = power;
      power *= t;
    }
  }
  std::vector<RatVector> inv = *Inverse(vander);
  const std::size_t n = values[0].size();
  std::vector<RatVector> coeffs(5, RatVector(n));
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t t = 0; t < 5; ++t) {
      if (sgn(inv[k][t]) != 0) Axpy(coeffs[k], inv[k][t], values[t]);
    }
  }
  return coeffs;
}

LiftResult SecondOrderLift(const FiberComplex& c, const CohomologyReport& report,
                           const RatVector& alpha) {
  if (alpha.size() != c.dim_aw()) throw DimensionMismatch("lift: alpha has the wrong length");
  RatVector first = c.Phi(alpha);
  if (!IsZero(first)) {
    throw FirstOrderObstructed("Phi(alpha) != 0 at coordinates " + Join(Support(first)));
  }
  RatVector theta = c.presentation().ThetaDense(alpha, alpha);
  LiftResult r;
  std::optional<RatVector> beta = Solve(c.phi(), Scale(Rat(-1, 2), theta));
  if (!beta) {
    r.obstruction_class = report.h3_space.Reduce(ToSparse(theta));
    if (IsZero(r.obstruction_class)) {
      throw VerificationFailure("lift: no solution but Theta(alpha, alpha) lies in im Phi");
    }
    return r;
  }
  r.lifted = true;
  r.beta = std::move(*beta);
  std::vector<RatVector> coeffs = LiftPolynomial(c, alpha, r.beta);
  r.truncated_coefficients.assign(coeffs.begin(), coeffs.begin() + 3);
  for (const auto& v : r.truncated_coefficients) {
    if (!IsZero(v)) throw VerificationFailure("lift: F(mu + t alpha + t^2 beta) != 0 mod t^3");
  }
  return r;
}

WellDefinedReport CheckWellDefined(const FiberComplex& c, const CohomologyReport& report,
                                   std::size_t trials, std::uint64_t seed) {
  WellDefinedReport r;
  r.trials = trials;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const QuadraticPresentation& p = c.presentation();
  const Subspace& ker = c.KernelPhi();
  const Subspace& im = c.ImagePhi();
  const std::size_t m = c.mu().dim();
  const bool builtin = p.type() != OperadType::kCustom;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    RatVector alpha(c.dim_aw());
    for (std::size_t i = 0; i < ker.dim(); ++i) Axpy(alpha, coeff(rng), ker.BasisVector(i));
    EndW xi(m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) xi(a, b) = coeff(rng);
    }
    RatVector dxi = c.Delta(xi);
    RatVector shifted = Add(alpha, dxi);

    std::string why;
    if (report.h3_space.Reduce(p.Theta(shifted, shifted)) !=
        report.h3_space.Reduce(p.Theta(alpha, alpha))) {
      why = "class of Theta changed under alpha -> alpha + delta xi";
    }
    if (why.empty() && !im.Contains(p.Theta(alpha, dxi))) {
      why = "Theta(alpha, delta xi) not in im Phi";
    }
    if (why.empty() && !im.Contains(p.Theta(dxi, dxi))) {
      why = "Theta(delta xi, delta xi) not in im Phi";
    }
    if (why.empty() && builtin) {
      RatVector moved = InfAct(xi, Law::FromCoords(m, c.mu().symmetry(), alpha));
      if (!IsZero(Add(p.ThetaDense(dxi, alpha), c.Phi(moved)))) {
        why = "Theta(delta xi, alpha) != -Phi(xi . alpha)";
      }
    }
    r.cross_terms_checked += 2;
    if (why.empty()) {
      ++r.passed;
    } else {
      r.failures.push_back("trial " + std::to_string(trial) + ": " + why);
    }
  }
  return r;
}

AnisotropyVerdict Anisotropy(const QuadraticObstruction& k, const AnisotropyOptions& options) {
  AnisotropyVerdict v;
  v.seed = options.seed;
  const std::size_t d = k.h2_dim;

  auto witness = [&](RatVector t) {
    if (!IsZero(EvaluateForms(k, t))) throw VerificationFailure("anisotropy: witness check failed");
    v.kind = VerdictKind::kIsotropicWitness;
    v.field = WitnessField::kRational;
    v.witness = std::move(t);
    return v;
  };

  if (d == 0) {
    v.kind = VerdictKind::kCertifiedAnisotropic;
    v.reason = CertificateReason::kVacuousH2Zero;
    return v;
  }

  if (d == 1) {
    for (const auto& form : k.forms) v.certificate.push_back(form[0][0]);
    if (!IsZero(v.certificate)) {
      v.kind = VerdictKind::kCertifiedAnisotropic;
      v.reason = CertificateReason::kDim1NonzeroForm;
      return v;
    }
    return witness(RatVector{Rat(1)});
  }

  if (d == 2) {
    // q_c(t1, t2) = a t1^2 + 2b t1 t2 + c t2^2. [1:0] is a common zero iff
    // every a vanishes; affine zeros [s:1] are roots of gcd_c q_c(s, 1).
    bool infinity = true;
    Poly g;
    for (const auto& form : k.forms) {
      if (sgn(form[0][0]) != 0) infinity = false;
      g = PolyGcd(g, Poly{form[1][1], 2 * form[0][1], form[0][0]});
    }
    if (infinity) return witness(RatVector{Rat(1), Rat(0)});
    // Not every form vanishes identically, so g is nonzero.
    v.certificate = g;
    if (g.size() == 1) {
      v.kind = VerdictKind::kCertifiedAnisotropic;
      v.reason = CertificateReason::kDim2GcdCertificate;
      return v;
    }
    if (g.size() == 2) return witness(RatVector{-g[0] / g[1], Rat(1)});
    Rat disc = g[1] * g[1] - 4 * g[2] * g[0];
    Rat root;
    if (IsSquare(disc, &root)) return witness(RatVector{(-g[1] + root) / (2 * g[2]), Rat(1)});
    v.kind = VerdictKind::kIsotropicWitness;
    v.field = WitnessField::kQuadraticExtension;
    v.gcd_factor = g;
    return v;
  }

  IntegerForms ints = ToIntegerForms(k);

  // Small rational box first: catches coordinate witnesses cheaply.
  std::int64_t box = 0;
  for (std::int64_t b = 1;; ++b) {
    long double points = 1;
    for (std::size_t i = 0; i < d; ++i) points *= static_cast<long double>(2 * b + 1);
    if (points > static_cast<long double>(options.box_cap)) break;
    box = b;
  }
  if (box == 0) box = 1;  // a single unit-vector sweep is always affordable
  v.rational_box = static_cast<std::size_t>(box);
  std::vector<std::int64_t> found;
  long double box_points = 1;
  for (std::size_t i = 0; i < d; ++i) box_points *= static_cast<long double>(2 * box + 1);
  if (box_points <= static_cast<long double>(options.box_cap)) {
    ForEachBoxPoint(d, box, [&](const std::vector<std::int64_t>& t) {
      if (IntegerZero(ints, t)) {
        found = t;
        return true;
      }
      return false;
    });
  } else {
    v.rational_box = 0;
    for (std::size_t i = 0; i < d && found.empty(); ++i) {
      std::vector<std::int64_t> t(d, 0);
      t[i] = 1;
      if (IntegerZero(ints, t)) found = t;
    }
  }
  if (!found.empty()) return witness(ToRat(found));

  // Exhaustive projective search modulo small primes.
  std::vector<std::int64_t> mod_p_zero;
  std::int64_t zero_prime = 0;
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    if (ProjectiveCount(d, p, options.point_cap) > options.point_cap) break;
    std::vector<std::vector<std::int64_t>> reduced;
    for (const auto& q : ints.forms) {
      std::vector<std::int64_t> row;
      for (const auto& x : q) {
        BigInt r = x % p;
        if (r < 0) r += p;
        row.push_back(r.get_si());
      }
      reduced.push_back(std::move(row));
    }
    v.primes_tested.push_back(static_cast<std::uint64_t>(p));
    v.search_exhaustive_up_to = static_cast<std::uint64_t>(p);
    bool hit = ForEachProjectivePoint(d, p, [&](const std::vector<std::int64_t>& t) {
      if (ModularZero(reduced, d, p, t)) {
        mod_p_zero = t;
        return true;
      }
      return false;
    });
    if (hit) {
      zero_prime = p;
      std::vector<std::int64_t> balanced = mod_p_zero;
      for (auto& x : balanced) {
        if (x > p / 2) x -= p;
      }
      if (IntegerZero(ints, balanced)) return witness(ToRat(balanced));
      break;
    }
  }

  // Bounded-height random rational search.
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> num(-options.random_height, options.random_height);
  v.random_trials = options.random_trials;
  std::vector<std::int64_t> t(d);
  for (std::size_t trial = 0; trial < options.random_trials; ++trial) {
    bool nonzero = false;
    for (auto& x : t) {
      x = num(rng);
      nonzero = nonzero || x != 0;
    }
    if (nonzero && IntegerZero(ints, t)) return witness(ToRat(t));
  }

  if (zero_prime != 0) {
    v.kind = VerdictKind::kIsotropicWitness;
    v.field = WitnessField::kFiniteField;
    v.witness_prime = static_cast<std::uint64_t>(zero_prime);
    for (auto x : mod_p_zero) v.witness_mod_p.push_back(static_cast<std::uint64_t>(x));
    return v;
  }
  v.kind = VerdictKind::kHeuristicAnisotropic;
  return v;
}

}  // namespace deformcx
