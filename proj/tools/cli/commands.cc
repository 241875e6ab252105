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

#include "cli/commands.h"

#include "deformcx/binaryforms.h"
#include "deformcx/builtins.h"
#include "deformcx/charcalc.h"
#include "deformcx/errors.h"
#include "deformcx/gram.h"
#include "deformcx/incidence.h"
#include "deformcx/obstruction.h"

namespace deformcx::cli {
namespace {

struct Pipeline {
  QuadraticPresentation p;
  FiberComplex c;
  CohomologyReport r;
};

Pipeline Run(const AlgebraInput& in, const CommandOptions& o) {
  QuadraticPresentation p = in.Presentation();
  FiberComplex c = FiberComplex::Build(in.law, p, {o.qdual_mode, o.rank_mode});
  CohomologyReport r = Cohomology(c);
  return Pipeline{std::move(p), std::move(c), std::move(r)};
}

Json Header(const char* command, const AlgebraInput& in) {
  Json j;
  j["command"] = command;
  j["input"] = RenderAlgebra(in);
  return j;
}

Json CohomologyJson(const Pipeline& pl, const CommandOptions& o) {
  const CohomologyReport& r = pl.r;
  const std::size_t m = pl.c.mu().dim();
  Json j;
  j["qdual_mode"] = std::string(ToString(r.qdual_mode));
  j["qdual_fell_back"] = r.qdual_fell_back;
  j["rank_mode"] = o.rank_mode == RankMode::kExact ? "exact" : "modular";
  j["dims"] = Json{{"g", r.dim_g}, {"A_W", r.dim_aw}, {"Qdual", r.dim_qdual},
                   {"V", pl.p.target_dim()}};
  j["ranks"] = Json{{"delta", r.rank_delta}, {"phi", r.rank_phi}};

  Json h1{{"dim", r.h1}, {"listed", r.h1 <= o.max_basis}};
  if (r.h1 <= o.max_basis) {
    Json list = Json::array();
    for (std::size_t i = 0; i < r.derivations.dim(); ++i) {
      list.push_back(EndVectorJson(m, r.derivations.BasisVector(i)));
    }
    h1["derivations"] = std::move(list);
  }
  Json h2{{"dim", r.h2}, {"listed", r.h2 <= o.max_basis}};
  if (r.h2 <= o.max_basis) {
    Json list = Json::array();
    LawBasis basis = pl.c.mu().basis();
    for (std::size_t i = 0; i < r.h2; ++i) {
      list.push_back(LawVectorJson(basis, r.h2_space.Representative(i)));
    }
    h2["representatives"] = std::move(list);
  }
  Json h3{{"dim", r.h3}, {"listed", r.h3 <= o.max_basis}};
  if (r.h3 <= o.max_basis) {
    Json list = Json::array();
    for (std::size_t i = 0; i < r.h3; ++i) {
      list.push_back(IdentityVectorJson(pl.p, r.h3_space.Representative(i)));
    }
    h3["representatives"] = std::move(list);
  }
  j["h1"] = std::move(h1);
  j["h2"] = std::move(h2);
  j["h3"] = std::move(h3);
  j["euler"] = Json{{"lhs", r.euler_lhs}, {"rhs", r.euler_rhs}, {"holds", r.euler_lhs == r.euler_rhs}};
  return j;
}

Json Kappa2Json(const QuadraticObstruction& k) {
  Json forms = Json::array();
  std::size_t zero = 0;
  for (std::size_t c = 0; c < k.forms.size(); ++c) {
    bool nonzero = false;
    for (const auto& row : k.forms[c]) nonzero = nonzero || !IsZero(row);
    if (!nonzero) {
      ++zero;
      continue;
    }
    forms.push_back(Json{{"index", c + 1}, {"matrix", MatrixJson(k.forms[c])}});
  }
  return Json{{"h2_dim", k.h2_dim}, {"h3_dim", k.h3_dim}, {"forms", std::move(forms)},
              {"zero_forms", zero}};
}

const char* Interpretation(const AnisotropyVerdict& v) {
  switch (v.kind) {
    case VerdictKind::kCertifiedAnisotropic:
      return "kappa_2 has trivial kernel. If mu is a smooth point of its reduced component, "
             "the orbit G.mu is Zariski open in it; smoothness is not verified.";
    case VerdictKind::kIsotropicWitness:
      return "kappa_2 vanishes on a nonzero class, which therefore admits a second-order lift.";
    case VerdictKind::kHeuristicAnisotropic:
      return "No common zero of the forms was found. For dim H^2 >= 3 this is evidence, "
             "not a certificate.";
  }
  return "";
}

Json VerdictJson(const AnisotropyVerdict& v) {
  Json j;
  j["kind"] = std::string(ToString(v.kind));
  if (v.kind == VerdictKind::kCertifiedAnisotropic) {
    j["reason"] = std::string(ToString(v.reason));
    if (!v.certificate.empty()) j["certificate"] = SparseJson(v.certificate);
  }
  if (v.kind == VerdictKind::kIsotropicWitness) {
    j["field"] = std::string(ToString(v.field));
    switch (v.field) {
      case WitnessField::kRational:
        j["witness"] = DenseJson(v.witness);
        break;
      case WitnessField::kFiniteField:
        j["witness_mod_p"] = Json{{"prime", v.witness_prime}, {"coords", v.witness_mod_p}};
        break;
      case WitnessField::kQuadraticExtension:
        // Root of gcd_factor[0] + gcd_factor[1] s + gcd_factor[2] s^2, t = (s, 1).
        j["gcd_factor"] = DenseJson(v.gcd_factor);
        break;
    }
  }
  j["evidence"] = Json{{"primes_tested", v.primes_tested},
                       {"search_exhaustive_up_to", v.search_exhaustive_up_to},
                       {"rational_box", v.rational_box},
                       {"random_trials", v.random_trials},
                       {"seed", v.seed}};
  j["interpretation"] = Interpretation(v);
  return j;
}

Json WellDefinedJson(const WellDefinedReport& w) {
  return Json{{"trials", w.trials},
              {"passed", w.passed},
              {"cross_terms_checked", w.cross_terms_checked},
              {"seed", w.seed},
              {"failures", w.failures},
              {"ok", w.ok()}};
}

Json RatioJson(const RatioTestResult& r) {
  auto eval = [](const RatioEvaluation& e) {
    return Json{{"triple", {e.triple[0], e.triple[1], e.triple[2]}},
                {"lands_on", e.index},
                {"jacobiator", RatJson(e.jacobiator.coeffs[e.index])},
                {"dpsi", RatJson(e.dpsi.coeffs[e.index])},
                {"ratio", RatJson(e.ratio)}};
  };
  Json ident;
  const char* names[3] = {"x^2", "xy", "y^2"};
  for (std::size_t i = 0; i < 3; ++i) {
    const Sl2Element& x = r.identification[i];
    ident[names[i]] = Json{{"e", RatJson(x.e)}, {"h", RatJson(x.h)}, {"f", RatJson(x.f)}};
  }
  return Json{{"first", eval(r.first)},
              {"second", eval(r.second)},
              {"r1", RatJson(r.r1)},
              {"r2", RatJson(r.r2)},
              {"quotient", RatJson(r.quotient)},
              {"not_proportional", r.not_proportional},
              {"convention_probe",
               Json{{"transvectant", "sum_k (-1)^k C(r,k) d^r f/dx^(r-k)dy^k d^r g/dx^k dy^(r-k)"},
                    {"dpsi", "-(psi(v,w).u - psi(u,w).v + psi(u,v).w)"},
                    {"reference_r1", RatJson(kReferenceRatio1)},
                    {"reference_r2", RatJson(kReferenceRatio2)},
                    {"scalar_r1", RatJson(r.scalar1)},
                    {"scalar_r2", RatJson(r.scalar2)},
                    {"common_scalar", r.common_scalar},
                    {"sym2_to_sl2", std::move(ident)}}}};
}

}  // namespace

Json CmdCohomology(const AlgebraInput& in, const CommandOptions& o) {
  Pipeline pl = Run(in, o);
  Json j = Header("cohomology", in);
  j["cohomology"] = CohomologyJson(pl, o);
  return j;
}

Json CmdObstruction(const AlgebraInput& in, const CommandOptions& o) {
  Pipeline pl = Run(in, o);
  Json j = Header("obstruction", in);
  j["cohomology"] = CohomologyJson(pl, o);
  j["kappa2"] = Kappa2Json(Kappa2(pl.c, pl.r));
  j["well_defined"] = WellDefinedJson(CheckWellDefined(pl.c, pl.r, o.trials, o.seed));
  return j;
}

Json CmdAnisotropy(const AlgebraInput& in, const CommandOptions& o) {
  Pipeline pl = Run(in, o);
  QuadraticObstruction k = Kappa2(pl.c, pl.r);
  AnisotropyOptions ao;
  ao.seed = o.seed;
  Json j = Header("anisotropy", in);
  j["cohomology"] = CohomologyJson(pl, o);
  j["kappa2"] = Kappa2Json(k);
  j["verdict"] = VerdictJson(Anisotropy(k, ao));
  return j;
}

Json CmdGram(const AlgebraInput& in, const CommandOptions& o) {
  GramForm g = Gram(in.law);
  Json j = Header("gram", in);
  j["matrix"] = MatrixJson(g.matrix.ToDense());
  j["rank"] = g.rank;
  Json radical = Json::array();
  for (std::size_t i = 0; i < g.radical.dim(); ++i) radical.push_back(DenseJson(g.radical.BasisVector(i)));
  j["radical"] = std::move(radical);
  if (in.law.symmetry() == Symmetry::kSkew) j["killing_agrees"] = KillingForm(in.law) == g.matrix;

  if (in.type == OperadType::kCustom) {
    j["containment"] = Json{{"skipped", "no builtin operad for a custom presentation"}};
  } else {
    std::optional<Subspace> ideal;
    if (in.ideal) ideal = Subspace::Span(in.law.dim(), *in.ideal);
    RadicalReport rr = RadicalContainment(in.law, in.type, ideal);
    Json basis = Json::array();
    for (std::size_t i = 0; i < rr.ideal.dim(); ++i) basis.push_back(DenseJson(rr.ideal.BasisVector(i)));
    j["containment"] = Json{{"type", std::string(ToString(rr.type))},
                            {"ideal_source", std::string(ToString(rr.source))},
                            {"ideal", std::move(basis)},
                            {"ideal_verified", rr.ideal_verified},
                            {"contained_in_radical", rr.contained}};
  }
  OrbitConstancyReport oc = GramOrbitConstancy(in.law, o.trials, o.seed);
  j["orbit_constancy"] = Json{{"trials", o.trials},
                              {"seed", oc.seed},
                              {"base_rank", oc.base_rank},
                              {"constant", oc.constant}};
  return j;
}

Json CmdLift(const AlgebraInput& in, const LiftRequest& request, const CommandOptions& o) {
  Pipeline pl = Run(in, o);
  LawBasis basis = in.law.basis();
  RatVector alpha;
  std::string source;
  if (request.alpha) {
    alpha = ParseLawVector(*request.alpha, basis);
    source = "explicit";
  } else if (request.h2_coords) {
    if (request.h2_coords->size() != pl.r.h2) {
      throw ParseError("--class needs " + std::to_string(pl.r.h2) + " H^2 coordinates");
    }
    alpha = pl.r.h2_space.Lift(*request.h2_coords);
    source = "h2_coordinates";
  } else {
    if (pl.r.h2 == 0) throw ParseError("H^2 = 0: there is no class to lift; pass --alpha");
    AnisotropyOptions ao;
    ao.seed = o.seed;
    AnisotropyVerdict v = Anisotropy(Kappa2(pl.c, pl.r), ao);
    if (v.kind == VerdictKind::kIsotropicWitness && v.field == WitnessField::kRational) {
      alpha = pl.r.h2_space.Lift(v.witness);
      source = "isotropic_witness";
    } else {
      alpha = pl.r.h2_space.Representative(0);
      source = "first_representative";
    }
  }
  LiftResult lr = SecondOrderLift(pl.c, pl.r, alpha);
  Json j = Header("lift", in);
  j["alpha"] = LawVectorJson(basis, alpha);
  j["alpha_source"] = source;
  j["lifted"] = lr.lifted;
  if (lr.lifted) {
    j["beta"] = LawVectorJson(basis, lr.beta);
    Json coeffs = Json::array();
    for (const auto& v : lr.truncated_coefficients) coeffs.push_back(IdentityVectorJson(pl.p, v));
    j["verification"] = Json{{"method", "F(mu + t alpha + t^2 beta) at t = 0..4, interpolated"},
                             {"coefficients_t0_t1_t2", std::move(coeffs)},
                             {"vanishes_mod_t3", true}};
  } else {
    j["obstruction_class"] = SparseJson(lr.obstruction_class);
  }
  return j;
}

Json CmdCharacters(const AlgebraInput& in, const CommandOptions& o) {
  if (!in.torus) throw ParseError("characters needs a 'torus' in the input");
  if (in.type == OperadType::kCustom) throw ParseError("characters needs a builtin operad type");
  Pipeline pl = Run(in, o);
  const TorusAction& t = *in.torus;
  InducedCharacters ic = InducedCharacter(in.type, t);
  GradedCohomology gc = ComputeGradedCohomology(pl.c, t);
  ChIdentityReport ch = ChIdentityCheck(pl.c, pl.r, t);

  Json blocks = Json::array();
  for (const auto& [w, b] : gc.blocks) {
    blocks.push_back(Json{{"weight", w},
                          {"g", b.dim_g},
                          {"A_W", b.dim_aw},
                          {"Qdual", b.dim_qdual},
                          {"rank_delta", b.rank_delta},
                          {"rank_phi", b.rank_phi},
                          {"h1", b.h1},
                          {"h2", b.h2},
                          {"h3", b.h3}});
  }
  Json j = Header("characters", in);
  j["qdual_mode"] = std::string(ToString(pl.c.qdual().mode));
  j["induced"] = Json{{"A_W", CharacterJson(ic.aw)},
                      {"Qdual_ambient", CharacterJson(ic.qdual)},
                      {"g", CharacterJson(ic.g)}};
  j["graded"] = Json{{"blocks", std::move(blocks)},
                     {"h1", CharacterJson(gc.h1)},
                     {"h2", CharacterJson(gc.h2)},
                     {"h3", CharacterJson(gc.h3)}};
  j["ch_identity"] = Json{{"lhs_h3", CharacterJson(ch.lhs)},
                          {"rhs", CharacterJson(ch.rhs)},
                          {"holds", ch.holds},
                          {"euler_degree0_lhs", ch.degree0_lhs},
                          {"euler_degree0_rhs", ch.degree0_rhs},
                          {"degree0_matches_euler", ch.degree0_matches_euler}};
  j["gram_weight_orthogonal"] = GramWeightOrthogonal(in.law, t);
  return j;
}

Json CmdRichardson(std::size_t n, bool full, const CommandOptions& o) {
  RichardsonReport r =
      RichardsonAnisotropy(full ? RichardsonMode::kFull : RichardsonMode::kFast, n, o.rank_mode);
  Json j;
  j["command"] = "richardson";
  j["n"] = n;
  j["pipeline"] = full ? "full" : "fast";
  j["ratios"] = RatioJson(r.ratios);
  j["conditional_on_h2_dim_1"] = r.conditional;
  j["verdict"] = VerdictJson(r.verdict);
  if (full) {
    j["cohomology"] = Json{{"dim_law", r.dim_law},
                           {"h1", r.h1},
                           {"h2", r.h2},
                           {"h3", r.h3},
                           {"rank_delta", r.rank_delta},
                           {"rank_phi", r.rank_phi},
                           {"euler", Json{{"lhs", r.euler_lhs}, {"rhs", r.euler_rhs}}}};
    j["phi_cocycle"] = Json{{"in_ker_phi", r.phi_in_kernel},
                            {"not_a_coboundary", r.phi_not_coboundary},
                            {"kappa_class", SparseJson(r.kappa_generator)}};
    j["modular_certificate"] = Json{{"primes", r.certifying_primes},
                                    {"augmented_ranks", r.augmented_ranks},
                                    {"rank_phi", r.rank_phi},
                                    {"theta_not_in_image", r.modular_not_in_image}};
  }
  return j;
}

Json CmdBuiltin(const std::string& name) { return RenderAlgebra(FromBuiltin(name)); }

Json CmdBuiltinList() {
  Json list = Json::array();
  for (const auto& name : BuiltinCatalog()) {
    BuiltinAlgebra b = Builtin(name);
    list.push_back(Json{{"name", b.name},
                        {"type", std::string(ToString(b.type))},
                        {"dim", b.law.dim()},
                        {"torus", b.torus.has_value()},
                        {"description", b.description}});
  }
  return Json{{"command", "builtin"}, {"builtins", std::move(list)}};
}

}  // namespace deformcx::cli
