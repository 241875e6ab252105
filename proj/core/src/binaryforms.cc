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

#include "deformcx/binaryforms.h"

#include <string>

#include "deformcx/errors.h"
#include "deformcx/modular.h"

namespace deformcx {
namespace {

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

Rat Binomial(std::size_t r, std::size_t k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), r, k);
  return Rat(b);
}

// x . v_i in Sym^{2n} for the sl2 basis element `which` (0 = e, 1 = h, 2 = f).
BinForm BasisAct(std::size_t which, const BinForm& f) {
  Sl2Element x{which == 0 ? 1 : 0, which == 1 ? 1 : 0, which == 2 ? 1 : 0};
  return Sl2Act(x, f);
}

RatVector Sl2Coords(const Sl2Element& x) { return {x.e, x.h, x.f}; }

}  // namespace

BinForm BinForm::Zero(std::size_t n) { return BinForm{n, RatVector(n + 1)}; }

BinForm BinForm::Monomial(std::size_t n, std::size_t i) {
  if (i > n) throw DimensionMismatch("monomial index exceeds the degree");
  BinForm f = Zero(n);
  f.coeffs[i] = 1;
  return f;
}

BinForm BinForm::operator+(const BinForm& o) const {
  if (degree != o.degree) throw DimensionMismatch("adding forms of different degrees");
  return BinForm{degree, Add(coeffs, o.coeffs)};
}

BinForm BinForm::operator-(const BinForm& o) const {
  if (degree != o.degree) throw DimensionMismatch("subtracting forms of different degrees");
  return BinForm{degree, Sub(coeffs, o.coeffs)};
}

BinForm BinForm::operator*(const Rat& s) const { return BinForm{degree, Scale(s, coeffs)}; }

std::size_t BinForm::SingleSupport() const {
  std::vector<std::size_t> s = Support(coeffs);
  return s.size() == 1 ? s[0] : kNpos;
}

BinForm Derivative(const BinForm& f, std::size_t a, std::size_t b) {
  const std::size_t n = f.degree;
  if (a + b > n) return BinForm::Zero(0);
  BinForm out = BinForm::Zero(n - a - b);
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t px = n - i, py = i;
    if (px < a || py < b || sgn(f.coeffs[i]) == 0) continue;
    Rat c = f.coeffs[i];
    for (std::size_t t = 0; t < a; ++t) c *= static_cast<unsigned long>(px - t);
    for (std::size_t t = 0; t < b; ++t) c *= static_cast<unsigned long>(py - t);
    out.coeffs[py - b] += c;
  }
  return out;
}

BinForm Product(const BinForm& f, const BinForm& g) {
  BinForm out = BinForm::Zero(f.degree + g.degree);
  for (std::size_t i = 0; i <= f.degree; ++i) {
    if (sgn(f.coeffs[i]) == 0) continue;
    for (std::size_t j = 0; j <= g.degree; ++j) out.coeffs[i + j] += f.coeffs[i] * g.coeffs[j];
  }
  return out;
}

BinForm Transvectant(const BinForm& f, const BinForm& g, std::size_t r) {
  if (r > f.degree || r > g.degree) {
    throw OrderTooHigh("transvectant order " + std::to_string(r) + " exceeds a degree");
  }
  BinForm out = BinForm::Zero(f.degree + g.degree - 2 * r);
  for (std::size_t k = 0; k <= r; ++k) {
    BinForm term = Product(Derivative(f, r - k, k), Derivative(g, k, r - k));
    Rat c = Binomial(r, k);
    if (k % 2 == 1) c = -c;
    Axpy(out.coeffs, c, term.coeffs);
  }
  return out;
}

Sl2Element Bracket(const Sl2Element& a, const Sl2Element& b) {
  // [e,f] = h, [h,e] = 2e, [h,f] = -2f
  Sl2Element out;
  out.h = a.e * b.f - a.f * b.e;
  out.e = 2 * (a.h * b.e - a.e * b.h);
  out.f = -2 * (a.h * b.f - a.f * b.h);
  return out;
}

BinForm Sl2Act(const Sl2Element& x, const BinForm& f) {
  const std::size_t n = f.degree;
  BinForm out = BinForm::Zero(n);
  for (std::size_t i = 0; i <= n; ++i) {
    const Rat& c = f.coeffs[i];
    if (sgn(c) == 0) continue;
    // e . x^{n-i} y^i = i x^{n-i+1} y^{i-1}
    if (i > 0 && sgn(x.e) != 0) out.coeffs[i - 1] += x.e * c * static_cast<unsigned long>(i);
    if (sgn(x.h) != 0) out.coeffs[i] += x.h * c * (static_cast<long>(n) - 2 * static_cast<long>(i));
    if (i < n && sgn(x.f) != 0) {
      out.coeffs[i + 1] += x.f * c * static_cast<unsigned long>(n - i);
    }
  }
  return out;
}

bool VerifySl2Relations(std::size_t n) {
  const Sl2Element basis[3] = {Sl2Element::E(), Sl2Element::H(), Sl2Element::F()};
  for (std::size_t i = 0; i <= n; ++i) {
    BinForm v = BinForm::Monomial(n, i);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        BinForm lhs = Sl2Act(a, Sl2Act(b, v)) - Sl2Act(b, Sl2Act(a, v));
        if (!(lhs == Sl2Act(Bracket(a, b), v))) return false;
      }
    }
  }
  return true;
}

SemidirectLaw BuildRichardson(std::size_t n) {
  if (n == 0) throw DimensionMismatch("BuildRichardson needs n >= 1");
  const std::size_t deg = 2 * n;
  const std::size_t m = 3 + deg + 1;
  Law law(m, Symmetry::kSkew);
  const Sl2Element basis[3] = {Sl2Element::E(), Sl2Element::H(), Sl2Element::F()};
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      RatVector c = Sl2Coords(Bracket(basis[a], basis[b]));
      for (std::size_t i = 0; i < 3; ++i) {
        if (sgn(c[i]) != 0) law.Set(i, a, b, c[i]);
      }
    }
    for (std::size_t j = 0; j <= deg; ++j) {
      BinForm image = BasisAct(a, BinForm::Monomial(deg, j));
      for (std::size_t i = 0; i <= deg; ++i) {
        if (sgn(image.coeffs[i]) != 0) law.Set(3 + i, a, 3 + j, image.coeffs[i]);
      }
    }
  }
  if (!IsZero(IdentityValue(OperadType::kLie, law))) {
    throw VerificationFailure("sl2 x Sym^" + std::to_string(deg) + " fails the Jacobi identity");
  }
  return SemidirectLaw{n, std::move(law)};
}

Law PhiCocycle(std::size_t n, std::size_t r) {
  if (r % 2 == 0) {
    throw EvenOrderNotAlternating("transvectant order " + std::to_string(r) +
                                  " is even, so (u, v)_r is symmetric");
  }
  if (r != n) throw DimensionMismatch("(u, v)_r lands in Sym^{2n} only for r = n");
  const std::size_t deg = 2 * n;
  const std::size_t m = 3 + deg + 1;
  std::vector<std::vector<BinForm>> table(deg + 1, std::vector<BinForm>(deg + 1));
  for (std::size_t a = 0; a <= deg; ++a) {
    for (std::size_t b = 0; b <= deg; ++b) {
      table[a][b] = Transvectant(BinForm::Monomial(deg, a), BinForm::Monomial(deg, b), r);
    }
  }
  Law phi(m, Symmetry::kSkew);
  for (std::size_t a = 0; a <= deg; ++a) {
    for (std::size_t b = a + 1; b <= deg; ++b) {
      if (!(table[b][a] == table[a][b] * Rat(-1))) {
        throw VerificationFailure("odd transvectant is not alternating");
      }
      for (std::size_t i = 0; i <= deg; ++i) {
        if (sgn(table[a][b].coeffs[i]) != 0) phi.Set(3 + i, 3 + a, 3 + b, table[a][b].coeffs[i]);
      }
    }
  }
  // Equivariance on the basis, which is the cocycle condition on (x, u, v).
  auto value = [&](const BinForm& u, const BinForm& v) {
    BinForm out = BinForm::Zero(deg);
    for (std::size_t a = 0; a <= deg; ++a) {
      if (sgn(u.coeffs[a]) == 0) continue;
      for (std::size_t b = 0; b <= deg; ++b) {
        if (sgn(v.coeffs[b]) == 0) continue;
        Axpy(out.coeffs, u.coeffs[a] * v.coeffs[b], table[a][b].coeffs);
      }
    }
    return out;
  };
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t a = 0; a <= deg; ++a) {
      BinForm u = BinForm::Monomial(deg, a);
      for (std::size_t b = a + 1; b <= deg; ++b) {
        BinForm v = BinForm::Monomial(deg, b);
        BinForm defect = BasisAct(x, table[a][b]) - value(BasisAct(x, u), v) -
                         value(u, BasisAct(x, v));
        if (!defect.IsZero()) throw VerificationFailure("transvectant cochain is not a cocycle");
      }
    }
  }
  return phi;
}

std::array<Sl2Element, 3> DeriveSym2ToSl2() {
  // Unknown T[row][col], row in (e, h, f), col in (x^2, xy, y^2); index
  // row * 3 + col. Equations T(x.q_j) - [x, T(q_j)] = 0.
  const Sl2Element basis[3] = {Sl2Element::E(), Sl2Element::H(), Sl2Element::F()};
  std::vector<RatVector> rows;
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t j = 0; j < 3; ++j) {
      BinForm moved = Sl2Act(basis[x], BinForm::Monomial(2, j));
      // Each output component (e, h, f) gives one equation.
      std::vector<RatVector> eq(3, RatVector(9));
      for (std::size_t col = 0; col < 3; ++col) {
        for (std::size_t row = 0; row < 3; ++row) eq[row][row * 3 + col] += moved.coeffs[col];
      }
      // [x, T(q_j)] = sum_row T[row][j] [x, basis_row]
      for (std::size_t row = 0; row < 3; ++row) {
        RatVector br = Sl2Coords(Bracket(basis[x], basis[row]));
        for (std::size_t out = 0; out < 3; ++out) eq[out][row * 3 + j] -= br[out];
      }
      for (auto& r : eq) rows.push_back(std::move(r));
    }
  }
  Subspace sol = Kernel(RatMatrix::FromDense(rows, 9));
  if (sol.dim() != 1) {
    throw VerificationFailure("equivariant Sym^2 -> sl2 maps do not form a line");
  }
  RatVector t = sol.BasisVector(0);
  if (sgn(t[0]) == 0) throw VerificationFailure("equivariant map kills x^2");
  t = Scale(1 / t[0], t);
  std::array<Sl2Element, 3> out;
  for (std::size_t col = 0; col < 3; ++col) out[col] = {t[col], t[3 + col], t[6 + col]};
  return out;
}

BinForm JacobiatorOfTransvectant(const BinForm& u, const BinForm& v, const BinForm& w,
                                 std::size_t r, const Rat& scale) {
  auto phi = [&](const BinForm& a, const BinForm& b) { return Transvectant(a, b, r) * scale; };
  return phi(phi(u, v), w) + phi(phi(v, w), u) + phi(phi(w, u), v);
}

RatioTestResult JacobiatorRatioTest(const RatioOptions& options) {
  const std::size_t n = options.n;
  if (n < 2 || n % 2 == 0) throw EvenOrderNotAlternating("the ratio test needs odd n >= 3");
  const std::size_t deg = 2 * n;
  RatioTestResult out;
  out.n = n;
  out.identification = DeriveSym2ToSl2();
  std::array<Sl2Element, 3> ident;
  for (std::size_t i = 0; i < 3; ++i) ident[i] = out.identification[i] * options.identification_scale;

  auto psi = [&](const BinForm& a, const BinForm& b) {
    BinForm q = Transvectant(a, b, deg - 1);
    Sl2Element x = ident[0] * q.coeffs[0] + ident[1] * q.coeffs[1] + ident[2] * q.coeffs[2];
    return x * options.psi_scale;
  };
  auto dpsi = [&](const BinForm& u, const BinForm& v, const BinForm& w) {
    return (Sl2Act(psi(v, w), u) - Sl2Act(psi(u, w), v) + Sl2Act(psi(u, v), w)) * Rat(-1);
  };
  auto weight = [&](std::size_t i) { return static_cast<long>(deg) - 2 * static_cast<long>(i); };

  auto evaluate = [&](std::array<std::size_t, 3> triple) {
    RatioEvaluation e;
    e.triple = triple;
    BinForm u = BinForm::Monomial(deg, triple[0]);
    BinForm v = BinForm::Monomial(deg, triple[1]);
    BinForm w = BinForm::Monomial(deg, triple[2]);
    e.jacobiator = JacobiatorOfTransvectant(u, v, w, n, options.phi_scale);
    e.dpsi = dpsi(u, v, w);
    long total = weight(triple[0]) + weight(triple[1]) + weight(triple[2]);
    std::size_t expected = static_cast<std::size_t>((static_cast<long>(deg) - total) / 2);
    if (e.jacobiator.SingleSupport() != expected || e.dpsi.SingleSupport() != expected) {
      throw NotScalarMultiple("evaluation on (v_" + std::to_string(triple[0]) + ", v_" +
                              std::to_string(triple[1]) + ", v_" + std::to_string(triple[2]) +
                              ") is not a multiple of v_" + std::to_string(expected));
    }
    e.index = expected;
    e.ratio = e.jacobiator.coeffs[expected] / e.dpsi.coeffs[expected];
    return e;
  };

  out.first = evaluate({0, 1, deg - 1});
  out.second = evaluate({1, 2, deg});
  out.r1 = out.first.ratio;
  out.r2 = out.second.ratio;
  out.quotient = out.r1 / out.r2;
  out.scalar1 = out.r1 / kReferenceRatio1;
  out.scalar2 = out.r2 / kReferenceRatio2;
  out.common_scalar = out.scalar1 == out.scalar2;
  out.not_proportional = out.r1 != out.r2;
  return out;
}

NrComparison CompareNrSquareWithJacobiator(std::size_t n) {
  const std::size_t deg = 2 * n;
  const std::size_t m = 3 + deg + 1;
  RatVector square = NrHalfSquare(PhiCocycle(n));
  NrComparison out;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      for (std::size_t l = k + 1; l < m; ++l) {
        RatVector value(m);
        for (std::size_t i = 0; i < m; ++i) {
          value[i] = square[IdentityIndex(OperadType::kLie, m, i, j, k, l)];
        }
        if (j < 3) {
          ++out.mixed_triples;
          if (!IsZero(value)) out.mixed_vanish = false;
          continue;
        }
        ++out.m_triples;
        BinForm jac = JacobiatorOfTransvectant(BinForm::Monomial(deg, j - 3),
                                               BinForm::Monomial(deg, k - 3),
                                               BinForm::Monomial(deg, l - 3), n);
        RatVector expected(m);
        for (std::size_t i = 0; i <= deg; ++i) expected[3 + i] = jac.coeffs[i];
        if (value != expected) out.m_triples_match = false;
      }
    }
  }
  return out;
}

RichardsonReport RichardsonAnisotropy(RichardsonMode mode, std::size_t n, RankMode rank_mode) {
  RichardsonReport out;
  out.mode = mode;
  out.n = n;
  out.ratios = JacobiatorRatioTest(RatioOptions{n});
  if (mode == RichardsonMode::kFast) {
    // With H^2 spanned by [phi], kappa is the single value [J_Phi] modulo the
    // coboundaries d psi; the ratio disagreement shows it is nonzero.
    out.conditional = true;
    out.verdict.kind = out.ratios.not_proportional ? VerdictKind::kCertifiedAnisotropic
                                                   : VerdictKind::kHeuristicAnisotropic;
    out.verdict.reason = out.ratios.not_proportional ? CertificateReason::kDim1NonzeroForm
                                                     : CertificateReason::kNone;
    return out;
  }

  out.conditional = false;
  SemidirectLaw l = BuildRichardson(n);
  Law phi = PhiCocycle(n);
  QuadraticPresentation p = QuadraticPresentation::Builtin(OperadType::kLie, l.law.dim());
  FiberComplex c = FiberComplex::Build(l.law, p, {QdualMode::kAmbient, rank_mode});
  CohomologyReport report = Cohomology(c);
  out.dim_law = l.law.dim();
  out.h1 = report.h1;
  out.h2 = report.h2;
  out.h3 = report.h3;
  out.rank_delta = report.rank_delta;
  out.rank_phi = report.rank_phi;
  out.euler_lhs = report.euler_lhs;
  out.euler_rhs = report.euler_rhs;

  RatVector phi_coords = phi.Coords();
  out.phi_in_kernel = IsZero(c.Phi(phi_coords));
  out.phi_not_coboundary = out.phi_in_kernel && !IsZero(report.h2_space.Reduce(phi_coords));
  if (out.phi_in_kernel) out.kappa_generator = ObstructionClass(c, report, phi_coords);

  out.obstruction = Kappa2(c, report);
  out.verdict = Anisotropy(out.obstruction);

  if (out.phi_in_kernel) {
    RatVector theta = p.ThetaDense(phi_coords, phi_coords);
    modular::ImageCertificate cert =
        modular::CertifyNotInImage(c.phi(), theta, report.rank_phi);
    out.certifying_primes = cert.primes;
    out.augmented_ranks = cert.augmented_ranks;
    out.modular_not_in_image = cert.not_in_image;
  }
  return out;
}

}  // namespace deformcx
