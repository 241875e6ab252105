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

#include "deformcx/builtins.h"

#include <charconv>
#include <functional>
#include <map>

#include "deformcx/binaryforms.h"
#include "deformcx/errors.h"

namespace deformcx {
namespace {

struct Spec {
  std::string base;
  std::optional<std::size_t> param;
};

Spec ParseSpec(std::string_view s) {
  Spec out;
  auto open = s.find('(');
  if (open == std::string_view::npos) {
    out.base = std::string(s);
    return out;
  }
  if (s.back() != ')') throw ParseError("malformed builtin name '" + std::string(s) + "'");
  out.base = std::string(s.substr(0, open));
  std::string_view digits = s.substr(open + 1, s.size() - open - 2);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ParseError("bad parameter in builtin name '" + std::string(s) + "'");
  }
  out.param = value;
  return out;
}

std::size_t Param(const Spec& s, std::size_t fallback, std::size_t lo, std::size_t hi) {
  std::size_t v = s.param.value_or(fallback);
  if (v < lo || v > hi) {
    throw ParseError("parameter of '" + s.base + "' must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return v;
}

TorusAction Torus(std::initializer_list<long> weights) {
  std::vector<WeightVector> w;
  for (long x : weights) w.push_back({x});
  return TorusAction(std::move(w));
}

Law Sl2() {
  // e, h, f: [e,f] = h, [h,e] = 2e, [h,f] = -2f
  Law l(3, Symmetry::kSkew);
  l.Set(0, 0, 1, -2);
  l.Set(1, 0, 2, 1);
  l.Set(2, 1, 2, -2);
  return l;
}

Law So3() {
  Law l(3, Symmetry::kSkew);
  l.Set(2, 0, 1, 1);
  l.Set(0, 1, 2, 1);
  l.Set(1, 0, 2, -1);
  return l;
}

// Matrix units E_ab of M_2, index 2a + b.
Law MatrixUnits(bool commutator) {
  Law l(4, commutator ? Symmetry::kSkew : Symmetry::kNone);
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t d = 0; d < 2; ++d) {
          const std::size_t x = 2 * a + b, y = 2 * c + d;
          if (commutator && x >= y) continue;
          // E_ab E_cd = [b == c] E_ad; the commutator subtracts [d == a] E_cb.
          RatVector v(4);
          if (b == c) v[2 * a + d] += 1;
          if (commutator && d == a) v[2 * c + b] -= 1;
          for (std::size_t i = 0; i < 4; ++i) {
            if (sgn(v[i]) != 0) l.Set(i, x, y, v[i]);
          }
        }
      }
    }
  }
  return l;
}

// k[x]/(x^n) on 1, x, ..., x^{n-1}.
Law Truncated(std::size_t n, Symmetry s) {
  Law l(n, s);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = (s == Symmetry::kNone ? 0 : a); b < n; ++b) {
      if (a + b < n) l.Set(a + b, a, b, 1);
    }
  }
  return l;
}

Law Split(std::size_t m, Symmetry s) {
  Law l(m, s);
  for (std::size_t i = 0; i < m; ++i) l.Set(i, i, i, 1);
  return l;
}

TorusAction TruncatedTorus(std::size_t n) {
  std::vector<WeightVector> w;
  for (std::size_t i = 0; i < n; ++i) w.push_back({static_cast<long>(i)});
  return TorusAction(std::move(w));
}

TorusAction ZeroTorus(std::size_t m) { return TorusAction(std::vector<WeightVector>(m, {0})); }

TorusAction RichardsonTorus(std::size_t n) {
  std::vector<WeightVector> w = {{2}, {0}, {-2}};
  for (std::size_t i = 0; i <= 2 * n; ++i) {
    w.push_back({static_cast<long>(2 * n) - 2 * static_cast<long>(i)});
  }
  return TorusAction(std::move(w));
}

// Generic torus for the zero law: weights 1, 2, 4, ... separate coordinates.
TorusAction FreeTorus(std::size_t m) {
  std::vector<WeightVector> w;
  for (std::size_t i = 0; i < m; ++i) w.push_back({1L << i});
  return TorusAction(std::move(w));
}

using Factory = std::function<BuiltinAlgebra(const Spec&)>;

const std::map<std::string, Factory>& Registry() {
  static const std::map<std::string, Factory> registry = {
      {"abelian",
       [](const Spec& s) {
         std::size_t m = Param(s, 2, 1, 8);
         return BuiltinAlgebra{"abelian(" + std::to_string(m) + ")", OperadType::kLie,
                               Law(m, Symmetry::kSkew), FreeTorus(m),
                               "abelian Lie algebra (zero bracket)"};
       }},
      {"sl2",
       [](const Spec&) {
         return BuiltinAlgebra{"sl2", OperadType::kLie, Sl2(), Torus({2, 0, -2}),
                               "sl2 on e, h, f: [e,f]=h, [h,e]=2e, [h,f]=-2f"};
       }},
      {"so3",
       [](const Spec&) {
         return BuiltinAlgebra{"so3", OperadType::kLie, So3(), std::nullopt,
                               "so3: [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2"};
       }},
      {"aff1",
       [](const Spec&) {
         Law l(2, Symmetry::kSkew);
         l.Set(1, 0, 1, 1);
         return BuiltinAlgebra{"aff1", OperadType::kLie, l, Torus({0, 1}),
                               "affine Lie algebra: [e1,e2]=e2"};
       }},
      {"heis3",
       [](const Spec&) {
         Law l(3, Symmetry::kSkew);
         l.Set(2, 0, 1, 1);
         return BuiltinAlgebra{"heis3", OperadType::kLie, l, Torus({1, 1, 2}),
                               "Heisenberg algebra: [e1,e2]=e3"};
       }},
      {"gl2",
       [](const Spec&) {
         return BuiltinAlgebra{"gl2", OperadType::kLie, MatrixUnits(true),
                               TorusAction({{0}, {1}, {-1}, {0}}),
                               "gl2 on E11, E12, E21, E22 with the commutator"};
       }},
      {"richardson",
       [](const Spec& s) {
         std::size_t n = Param(s, 7, 1, 12);
         return BuiltinAlgebra{"richardson(" + std::to_string(n) + ")", OperadType::kLie,
                               BuildRichardson(n).law, RichardsonTorus(n),
                               "sl2 x Sym^" + std::to_string(2 * n) + " with abelian ideal"};
       }},
      {"kx2",
       [](const Spec&) {
         return BuiltinAlgebra{"kx2", OperadType::kAssoc, Truncated(2, Symmetry::kNone),
                               TruncatedTorus(2), "k[x]/(x^2) on 1, x"};
       }},
      {"kx3",
       [](const Spec&) {
         return BuiltinAlgebra{"kx3", OperadType::kAssoc, Truncated(3, Symmetry::kNone),
                               TruncatedTorus(3), "k[x]/(x^3) on 1, x, x^2"};
       }},
      {"k_split",
       [](const Spec& s) {
         std::size_t m = Param(s, 2, 1, 8);
         return BuiltinAlgebra{"k_split(" + std::to_string(m) + ")", OperadType::kAssoc,
                               Split(m, Symmetry::kNone), ZeroTorus(m),
                               "split etale algebra k x ... x k"};
       }},
      {"ut2",
       [](const Spec&) {
         // E11, E12, E22
         Law l(3, Symmetry::kNone);
         l.Set(0, 0, 0, 1);
         l.Set(1, 0, 1, 1);
         l.Set(1, 1, 2, 1);
         l.Set(2, 2, 2, 1);
         return BuiltinAlgebra{"ut2", OperadType::kAssoc, l, Torus({0, 1, 0}),
                               "upper triangular 2x2 matrices on E11, E12, E22"};
       }},
      {"m2",
       [](const Spec&) {
         return BuiltinAlgebra{"m2", OperadType::kAssoc, MatrixUnits(false),
                               TorusAction({{0}, {1}, {-1}, {0}}),
                               "2x2 matrices on E11, E12, E21, E22"};
       }},
      {"kx2_comm",
       [](const Spec&) {
         return BuiltinAlgebra{"kx2_comm", OperadType::kComm, Truncated(2, Symmetry::kSymmetric),
                               TruncatedTorus(2), "k[x]/(x^2) as a commutative law"};
       }},
      {"kx3_comm",
       [](const Spec&) {
         return BuiltinAlgebra{"kx3_comm", OperadType::kComm, Truncated(3, Symmetry::kSymmetric),
                               TruncatedTorus(3), "k[x]/(x^3) as a commutative law"};
       }},
      {"k_split_comm",
       [](const Spec& s) {
         std::size_t m = Param(s, 2, 1, 8);
         return BuiltinAlgebra{"k_split_comm(" + std::to_string(m) + ")", OperadType::kComm,
                               Split(m, Symmetry::kSymmetric), ZeroTorus(m),
                               "split etale algebra as a commutative law"};
       }},
      {"leib2",
       [](const Spec&) {
         Law l(2, Symmetry::kNone);
         l.Set(1, 0, 0, 1);
         return BuiltinAlgebra{"leib2", OperadType::kLeib, l, Torus({1, 2}),
                               "non-Lie right Leibniz algebra: mu(e1,e1)=e2"};
       }},
      {"sl2_leib",
       [](const Spec&) {
         return BuiltinAlgebra{"sl2_leib", OperadType::kLeib, Sl2().WithSymmetry(Symmetry::kNone),
                               Torus({2, 0, -2}), "sl2 viewed as a Leibniz law"};
       }},
      {"abelian_leib",
       [](const Spec& s) {
         std::size_t m = Param(s, 2, 1, 6);
         return BuiltinAlgebra{"abelian_leib(" + std::to_string(m) + ")", OperadType::kLeib,
                               Law(m, Symmetry::kNone), FreeTorus(m),
                               "zero law as a Leibniz algebra"};
       }},
  };
  return registry;
}

}  // namespace

BuiltinAlgebra Builtin(std::string_view spec) {
  Spec s = ParseSpec(spec);
  const auto& registry = Registry();
  auto it = registry.find(s.base);
  if (it == registry.end()) throw ParseError("unknown builtin algebra '" + std::string(spec) + "'");
  BuiltinAlgebra a = it->second(s);
  if (!IsZero(IdentityValue(a.type, a.law))) {
    throw VerificationFailure("builtin '" + a.name + "' fails its identity");
  }
  if (a.torus && !a.torus->Fixes(a.law)) {
    throw VerificationFailure("builtin torus does not fix '" + a.name + "'");
  }
  return a;
}

std::vector<std::string> BuiltinCatalog() {
  return {"abelian(2)", "abelian(3)", "sl2",         "so3",          "aff1",
          "heis3",      "gl2",        "richardson(1)", "kx2",        "kx3",
          "k_split(2)", "ut2",        "m2",          "kx2_comm",     "kx3_comm",
          "k_split_comm(2)", "leib2", "sl2_leib",    "abelian_leib(2)"};
}

}  // namespace deformcx
