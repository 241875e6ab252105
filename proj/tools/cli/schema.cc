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

#include "cli/schema.h"

#include <array>
#include <map>
#include <set>
#include <sstream>

#include "deformcx/builtins.h"
#include "deformcx/errors.h"

namespace deformcx::cli {
namespace {

const std::set<std::string> kAlgebraKeys = {"name",  "dim",   "symmetry", "type", "law",
                                            "custom_presentation", "torus", "ideal"};

std::size_t Index1(const Json& j, const char* key, std::size_t limit, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw ParseError(where + ": '" + key + "' must be a positive integer");
  }
  std::size_t v = j[key].get<std::size_t>();
  if (v < 1 || v > limit) {
    throw ParseError(where + ": '" + key + "' = " + std::to_string(v) + " outside 1.." +
                     std::to_string(limit));
  }
  return v - 1;
}

std::size_t Count(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw ParseError(where + ": '" + key + "' must be a non-negative integer");
  }
  return j[key].get<std::size_t>();
}

std::string String(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ParseError(where + ": '" + key + "' must be a string");
  }
  return j[key].get<std::string>();
}

// (i, j, k) with j, k reordered into the free index set, and the sign
// picked up on the way.
struct Canonical {
  std::array<std::size_t, 3> index;
  int sign = 1;
};

Canonical Canonicalize(Symmetry s, std::size_t i, std::size_t j, std::size_t k) {
  if (s != Symmetry::kNone && j > k) return {{i, k, j}, s == Symmetry::kSkew ? -1 : 1};
  return {{i, j, k}, 1};
}

}  // namespace

QuadraticPresentation AlgebraInput::Presentation() const {
  if (type == OperadType::kCustom) {
    if (!custom) throw ParseError("type 'custom' needs a custom_presentation");
    return CustomPresentationForLaws(custom->entries, law.dim(), law.symmetry(),
                                     custom->target_dim);
  }
  return QuadraticPresentation::Builtin(type, law.dim());
}

bool operator==(const AlgebraInput& a, const AlgebraInput& b) {
  auto torus_eq = [](const std::optional<TorusAction>& x, const std::optional<TorusAction>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || x->weights() == y->weights();
  };
  auto custom_eq = [](const std::optional<CustomInput>& x, const std::optional<CustomInput>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    if (x->target_dim != y->target_dim || x->entries.size() != y->entries.size()) return false;
    for (std::size_t i = 0; i < x->entries.size(); ++i) {
      const auto& p = x->entries[i];
      const auto& q = y->entries[i];
      if (p.a != q.a || p.p != q.p || p.q != q.q || p.value != q.value) return false;
    }
    return true;
  };
  return a.name == b.name && a.type == b.type && a.law == b.law && torus_eq(a.torus, b.torus) &&
         custom_eq(a.custom, b.custom) && a.ideal == b.ideal;
}

Json RatJson(const Rat& q) { return ToString(q); }

Rat ParseRatJson(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": rationals must be strings like \"-3/4\"");
  return ParseRat(j.get<std::string>());
}

Json DenseJson(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(RatJson(x));
  return out;
}

Json SparseJson(const RatVector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.push_back(Json{{"index", i + 1}, {"c", RatJson(v[i])}});
  }
  return out;
}

Json SparseJson(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [i, x] : v) out.push_back(Json{{"index", i + 1}, {"c", RatJson(x)}});
  return out;
}

Json LawVectorJson(const LawBasis& basis, const RatVector& v) {
  Json out = Json::array();
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (sgn(v[p]) == 0) continue;
    LawIndex x = basis.Triple(p);
    out.push_back(Json{{"i", x.i + 1}, {"j", x.j + 1}, {"k", x.k + 1}, {"c", RatJson(v[p])}});
  }
  return out;
}

Json EndVectorJson(std::size_t m, const RatVector& v) {
  Json out = Json::array();
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (sgn(v[p]) == 0) continue;
    out.push_back(Json{{"row", p / m + 1}, {"col", p % m + 1}, {"c", RatJson(v[p])}});
  }
  return out;
}

Json IdentityVectorJson(const QuadraticPresentation& p, const RatVector& v) {
  if (p.type() == OperadType::kCustom) return SparseJson(v);
  const std::size_t m = p.law_dim();
  Json out = Json::array();
  std::vector<std::size_t> support = Support(v);
  if (support.empty()) return out;
  std::map<std::size_t, std::array<std::size_t, 4>> labels;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          if (p.type() == OperadType::kLie && !(j < k && k < l)) continue;
          labels[IdentityIndex(p.type(), m, i, j, k, l)] = {i, j, k, l};
        }
      }
    }
  }
  for (std::size_t idx : support) {
    const auto& t = labels.at(idx);
    out.push_back(Json{{"i", t[0] + 1},
                       {"j", t[1] + 1},
                       {"k", t[2] + 1},
                       {"l", t[3] + 1},
                       {"c", RatJson(v[idx])}});
  }
  return out;
}

Json MatrixJson(const std::vector<RatVector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(DenseJson(r));
  return out;
}

Json CharacterJson(const Character& c) {
  Json out = Json::array();
  for (const auto& [w, n] : c.terms()) out.push_back(Json{{"weight", w}, {"mult", n}});
  return out;
}

RatVector ParseLawVector(const Json& j, const LawBasis& basis) {
  if (!j.is_array()) throw ParseError("law entries must be an array");
  const std::size_t m = basis.m();
  RatVector out(basis.size());
  std::map<std::array<std::size_t, 3>, Rat> seen;
  std::size_t n = 0;
  for (const auto& e : j) {
    const std::string where = "law entry " + std::to_string(++n);
    if (!e.is_object()) throw ParseError(where + ": must be an object");
    for (const auto& [key, value] : e.items()) {
      if (key != "i" && key != "j" && key != "k" && key != "c") {
        throw ParseError(where + ": unknown key '" + key + "'");
      }
    }
    std::size_t i = Index1(e, "i", m, where);
    std::size_t jj = Index1(e, "j", m, where);
    std::size_t k = Index1(e, "k", m, where);
    if (!e.contains("c")) throw ParseError(where + ": missing 'c'");
    Rat c = ParseRatJson(e["c"], where);
    if (basis.symmetry() == Symmetry::kSkew && jj == k) {
      if (sgn(c) != 0) throw SymmetryMismatch(where + ": skew law with a nonzero diagonal entry");
      continue;
    }
    Canonical can = Canonicalize(basis.symmetry(), i, jj, k);
    Rat value = c * can.sign;
    auto [it, inserted] = seen.emplace(can.index, value);
    if (!inserted && it->second != value) {
      throw ParseError(where + ": conflicts with an earlier entry for the same coefficient");
    }
    out[basis.Index(can.index[0], can.index[1], can.index[2])] = value;
  }
  return out;
}

RatVector ParseRatList(const std::string& text) {
  RatVector out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in rational list");
    out.push_back(ParseRat(item.substr(b, e - b + 1)));
  }
  return out;
}

AlgebraInput ParseAlgebra(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra input must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kAlgebraKeys.count(key)) throw ParseError("unknown key '" + key + "'");
  }
  AlgebraInput a;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("'name' must be a string");
    a.name = j["name"].get<std::string>();
  }
  const std::size_t m = Count(j, "dim", "input");
  if (m == 0) throw ParseError("input: 'dim' must be at least 1");
  Symmetry s = ParseSymmetry(String(j, "symmetry", "input"));
  a.type = ParseOperadType(String(j, "type", "input"));
  if (a.type != OperadType::kCustom && s != LawSymmetryFor(a.type)) {
    throw SymmetryMismatch("type '" + std::string(ToString(a.type)) + "' needs symmetry '" +
                           std::string(ToString(LawSymmetryFor(a.type))) + "', got '" +
                           std::string(ToString(s)) + "'");
  }
  if (!j.contains("law")) throw ParseError("input: missing 'law'");
  LawBasis basis(m, s);
  a.law = Law::FromCoords(m, s, ParseLawVector(j["law"], basis));

  if (j.contains("custom_presentation")) {
    if (a.type != OperadType::kCustom) {
      throw ParseError("custom_presentation is only allowed with type 'custom'");
    }
    const Json& cp = j["custom_presentation"];
    if (!cp.is_object()) throw ParseError("custom_presentation must be an object");
    CustomInput ci;
    ci.target_dim = Count(cp, "target_dim", "custom_presentation");
    if (cp.contains("ambient_dim") && Count(cp, "ambient_dim", "custom_presentation") != basis.size()) {
      throw ParseError("custom_presentation: ambient_dim must equal dim A_W = " +
                       std::to_string(basis.size()));
    }
    if (!cp.contains("entries") || !cp["entries"].is_array()) {
      throw ParseError("custom_presentation: 'entries' must be an array");
    }
    std::size_t n = 0;
    for (const auto& e : cp["entries"]) {
      const std::string where = "presentation entry " + std::to_string(++n);
      if (!e.is_object() || !e.contains("c")) throw ParseError(where + ": needs a, p, q, c");
      TensorEntry t;
      t.a = Index1(e, "a", ci.target_dim, where);
      t.p = Index1(e, "p", basis.size(), where);
      t.q = Index1(e, "q", basis.size(), where);
      t.value = ParseRatJson(e["c"], where);
      ci.entries.push_back(std::move(t));
    }
    a.custom = std::move(ci);
  } else if (a.type == OperadType::kCustom) {
    throw ParseError("type 'custom' needs a custom_presentation");
  }

  if (j.contains("torus")) {
    const Json& t = j["torus"];
    if (!t.is_array() || t.size() != m) throw ParseError("torus: need one weight tuple per basis vector");
    std::vector<WeightVector> w;
    for (const auto& tuple : t) {
      if (!tuple.is_array()) throw ParseError("torus: weights must be integer arrays");
      WeightVector v;
      for (const auto& x : tuple) {
        if (!x.is_number_integer()) throw ParseError("torus: weights must be integers");
        v.push_back(x.get<long>());
      }
      w.push_back(std::move(v));
    }
    try {
      a.torus = TorusAction(std::move(w));
    } catch (const DimensionMismatch& e) {
      throw ParseError(std::string("torus: ") + e.what());
    }
  }

  if (j.contains("ideal")) {
    const Json& id = j["ideal"];
    if (!id.is_array()) throw ParseError("ideal: must be an array of vectors");
    std::vector<RatVector> vecs;
    for (const auto& v : id) {
      if (!v.is_array() || v.size() != m) throw ParseError("ideal: each vector needs dim entries");
      RatVector r;
      for (const auto& x : v) r.push_back(ParseRatJson(x, "ideal"));
      vecs.push_back(std::move(r));
    }
    a.ideal = std::move(vecs);
  }
  return a;
}

Json RenderAlgebra(const AlgebraInput& a) {
  Json j;
  if (!a.name.empty()) j["name"] = a.name;
  j["dim"] = a.law.dim();
  j["symmetry"] = std::string(ToString(a.law.symmetry()));
  j["type"] = std::string(ToString(a.type));
  j["law"] = LawVectorJson(a.law.basis(), a.law.Coords());
  if (a.custom) {
    Json cp;
    cp["ambient_dim"] = a.law.basis().size();
    cp["target_dim"] = a.custom->target_dim;
    Json entries = Json::array();
    for (const auto& e : a.custom->entries) {
      entries.push_back(Json{{"a", e.a + 1}, {"p", e.p + 1}, {"q", e.q + 1}, {"c", RatJson(e.value)}});
    }
    cp["entries"] = std::move(entries);
    j["custom_presentation"] = std::move(cp);
  }
  if (a.torus) j["torus"] = a.torus->weights();
  if (a.ideal) {
    Json id = Json::array();
    for (const auto& v : *a.ideal) id.push_back(DenseJson(v));
    j["ideal"] = std::move(id);
  }
  return j;
}

AlgebraInput FromBuiltin(std::string_view spec) {
  BuiltinAlgebra b = Builtin(spec);
  AlgebraInput a;
  a.name = b.name;
  a.type = b.type;
  a.law = std::move(b.law);
  a.torus = std::move(b.torus);
  return a;
}

}  // namespace deformcx::cli
