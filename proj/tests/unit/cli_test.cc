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

#include <sstream>

#include "cli/app.h"
#include "cli/schema.h"
#include "deformcx/builtins.h"
#include "deformcx/errors.h"

namespace deformcx::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Outcome Invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Outcome r;
  r.code = RunCli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

TEST(Schema, RoundTripsEveryBuiltin) {
  for (const auto& name : BuiltinCatalog()) {
    AlgebraInput a = FromBuiltin(name);
    AlgebraInput back = ParseAlgebra(Json::parse(RenderAlgebra(a).dump()));
    EXPECT_TRUE(back == a) << name;
    EXPECT_EQ(RenderAlgebra(back), RenderAlgebra(a)) << name;
  }
}

TEST(Schema, RationalsMustBeStrings) {
  Json j = Json::parse(R"({"dim":2,"symmetry":"skew","type":"lie",
                           "law":[{"i":2,"j":1,"k":2,"c":1}]})");
  EXPECT_THROW(ParseAlgebra(j), ParseError);
  j["law"][0]["c"] = "1";
  EXPECT_NO_THROW(ParseAlgebra(j));
}

TEST(Schema, Errors) {
  auto parse = [](const char* text) { return ParseAlgebra(Json::parse(text)); };
  EXPECT_THROW(parse(R"({"dim":2,"symmetry":"skew","type":"lie","law":[],"extra":1})"),
               ParseError);
  EXPECT_THROW(parse(R"({"dim":2,"symmetry":"skew","type":"lie",
                         "law":[{"i":3,"j":1,"k":2,"c":"1"}]})"),
               ParseError);
  EXPECT_THROW(parse(R"({"dim":2,"symmetry":"skew","type":"lie",
                         "law":[{"i":1,"j":2,"k":2,"c":"1"}]})"),
               SymmetryMismatch);
  EXPECT_THROW(parse(R"({"dim":2,"symmetry":"none","type":"assoc",
                         "law":[{"i":1,"j":1,"k":1,"c":"1/0"}]})"),
               ParseError);
  // The skew law lists [e2, e1] with the wrong sign relative to [e1, e2].
  EXPECT_THROW(parse(R"({"dim":2,"symmetry":"skew","type":"lie",
                         "law":[{"i":2,"j":1,"k":2,"c":"1"},{"i":2,"j":2,"k":1,"c":"1"}]})"),
               ParseError);
}

TEST(Cli, BuiltinSl2) {
  Outcome r = Invoke({"builtin", "sl2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  AlgebraInput a = ParseAlgebra(r.json());
  EXPECT_EQ(a.law, Builtin("sl2").law);
  EXPECT_EQ(Invoke({"builtin", "--list"}).code, kExitOk);
}

TEST(Cli, CohomologyOfAbelianPlane) {
  Outcome r = Invoke({"cohomology", "--builtin", "abelian(2)"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json c = r.json()["cohomology"];
  EXPECT_EQ(c["h1"]["dim"], 4);
  EXPECT_EQ(c["h2"]["dim"], 2);
  EXPECT_EQ(c["h3"]["dim"], 0);
  EXPECT_EQ(c["euler"]["holds"], true);
}

TEST(Cli, ReadsStandardInput) {
  std::string sl2 = Invoke({"builtin", "sl2"}).out;
  Outcome r = Invoke({"cohomology", "-"}, sl2);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["cohomology"]["h1"]["dim"], 3);
}

TEST(Cli, RichardsonFast) {
  Outcome r = Invoke({"richardson", "--n", "7"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["ratios"]["r1"], "24024/5");
  EXPECT_EQ(j["ratios"]["r2"], "-7392");
  EXPECT_EQ(j["ratios"]["quotient"], "-13/20");
  EXPECT_EQ(j["ratios"]["convention_probe"]["scalar_r1"], "1");
}

TEST(Cli, NotOnLocusExitCode) {
  const char* jacobi_fails = R"({"dim":3,"symmetry":"skew","type":"lie","law":[
      {"i":3,"j":1,"k":2,"c":"1"},{"i":1,"j":2,"k":3,"c":"1"},{"i":1,"j":1,"k":3,"c":"2"}]})";
  Outcome r = Invoke({"cohomology", "-"}, jacobi_fails);
  EXPECT_EQ(r.code, kExitNotOnLocus);
  Json j = r.json();
  EXPECT_EQ(j["error"], "NotOnLocus");
  EXPECT_FALSE(j["nonzero_coordinates"].empty());
}

TEST(Cli, SchemaExitCodes) {
  EXPECT_EQ(Invoke({"cohomology", "-"}, "{not json").code, kExitSchema);
  EXPECT_EQ(Invoke({"cohomology", "-"}, R"({"dim":2,"bogus":true})").code, kExitSchema);
  EXPECT_EQ(Invoke({"cohomology"}).code, kExitSchema);
  EXPECT_EQ(Invoke({"cohomology", "--builtin", "nope"}).code, kExitSchema);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitSchema);
  EXPECT_EQ(Invoke({"cohomology", "--builtin", "sl2", "--mode", "fuzzy"}).code, kExitSchema);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(Cli, CharactersNeedATorus) {
  EXPECT_EQ(Invoke({"characters", "--builtin", "so3"}).code, kExitSchema);
  Outcome r = Invoke({"characters", "--builtin", "sl2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["ch_identity"]["holds"], true);
}

TEST(Cli, LiftWithExplicitAlpha) {
  Outcome r = Invoke({"lift", "--builtin", "kx2", "--alpha", R"([{"i":1,"j":2,"k":2,"c":"1"}])"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.json()["lifted"], true);
  EXPECT_EQ(r.json()["verification"]["vanishes_mod_t3"], true);
  // A non-cocycle is rejected.
  Outcome bad = Invoke({"lift", "--builtin", "sl2", "--alpha", R"([{"i":1,"j":1,"k":2,"c":"1"}])"});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_EQ(bad.json()["error"], "FirstOrderObstructed");
}

TEST(Cli, ReportsAreDeterministicGivenSeed) {
  for (const char* cmd : {"gram", "obstruction", "anisotropy"}) {
    Outcome a = Invoke({cmd, "--builtin", "heis3", "--seed", "42"});
    Outcome b = Invoke({cmd, "--builtin", "heis3", "--seed", "42"});
    ASSERT_EQ(a.code, kExitOk) << cmd << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

void Leaves(const Json& j, std::vector<std::string>& out) {
  if (j.is_object() || j.is_array()) {
    for (const auto& x : j) Leaves(x, out);
  } else if (j.is_string()) {
    out.push_back(j.get<std::string>());
  } else {
    out.push_back(j.dump());
  }
}

// Every scalar of the JSON report appears in the text report, in order.
TEST(Cli, TextAndJsonAgree) {
  for (const char* cmd : {"cohomology", "obstruction", "anisotropy", "gram", "characters"}) {
    Outcome json = Invoke({cmd, "--builtin", "kx2"});
    Outcome text = Invoke({cmd, "--builtin", "kx2", "--format", "text"});
    ASSERT_EQ(json.code, kExitOk) << cmd;
    ASSERT_EQ(text.code, kExitOk) << cmd;
    std::vector<std::string> leaves;
    Leaves(json.json(), leaves);
    std::size_t pos = 0;
    for (const auto& leaf : leaves) {
      std::size_t at = text.out.find(leaf, pos);
      ASSERT_NE(at, std::string::npos) << cmd << ": missing " << leaf;
      pos = at + leaf.size();
    }
  }
}

}  // namespace
}  // namespace deformcx::cli
