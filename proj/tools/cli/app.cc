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

#include "cli/app.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "cli/text.h"
#include "deformcx/errors.h"

namespace deformcx::cli {
namespace {

struct Source {
  std::string path;
  std::string builtin;
};

void AddSource(CLI::App* sub, Source& s) {
  sub->add_option("input", s.path, "Algebra JSON file, or - for standard input");
  sub->add_option("--builtin,-b", s.builtin, "Use a builtin algebra, e.g. sl2 or abelian(3)");
}

AlgebraInput LoadInput(const Source& s, std::istream& in) {
  if (!s.builtin.empty() && !s.path.empty()) throw ParseError("give either an input file or --builtin");
  if (!s.builtin.empty()) return FromBuiltin(s.builtin);
  if (s.path.empty()) throw ParseError("missing input: pass a JSON file, - or --builtin NAME");
  if (s.path == "-") return ParseAlgebra(Json::parse(in));
  std::ifstream file(s.path);
  if (!file) throw ParseError("cannot open '" + s.path + "'");
  return ParseAlgebra(Json::parse(file));
}

Json LoadJsonArgument(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream file(text.substr(1));
    if (!file) throw ParseError("cannot open '" + text.substr(1) + "'");
    return Json::parse(file);
  }
  return Json::parse(text);
}

int ExitCodeFor(const Error& e) {
  if (dynamic_cast<const NotOnLocus*>(&e)) return kExitNotOnLocus;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const SymmetryMismatch*>(&e) ||
      dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const AsymmetricTensor*>(&e) ||
      dynamic_cast<const SpanTooLarge*>(&e)) {
    return kExitSchema;
  }
  return kExitFailure;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Incidence deformation complexes of algebra laws: cohomology, quadratic "
               "obstructions, anisotropy, Gram forms and torus characters."};
  app.name("deformcx");
  app.require_subcommand(1);
  app.fallthrough();

  CommandOptions opts;
  std::string qdual, mode = "exact", format = "json";
  bool timing = false;
  app.add_option("--qdual-mode", qdual, "Model of Q*: ambient or span")
      ->check(CLI::IsMember({"ambient", "span"}));
  app.add_option("--mode", mode, "Rank computation: exact or modular")
      ->check(CLI::IsMember({"exact", "modular"}));
  app.add_option("--seed", opts.seed, "Seed for every randomized step");
  app.add_option("--trials", opts.trials, "Randomized trials for property checks");
  app.add_option("--max-basis", opts.max_basis, "List bases only up to this dimension");
  app.add_option("--format", format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", timing, "Add wall-clock time to the report");

  Source src;
  std::map<std::string, std::function<Json(const AlgebraInput&)>> algebra_commands = {
      {"cohomology", [&](const AlgebraInput& a) { return CmdCohomology(a, opts); }},
      {"obstruction", [&](const AlgebraInput& a) { return CmdObstruction(a, opts); }},
      {"anisotropy", [&](const AlgebraInput& a) { return CmdAnisotropy(a, opts); }},
      {"gram", [&](const AlgebraInput& a) { return CmdGram(a, opts); }},
      {"characters", [&](const AlgebraInput& a) { return CmdCharacters(a, opts); }},
  };
  const std::map<std::string, std::string> help = {
      {"cohomology", "H^1, H^2, H^3 of the incidence complex with the Euler check"},
      {"obstruction", "Quadratic obstruction forms and representative-independence checks"},
      {"anisotropy", "Anisotropy verdict for the quadratic obstruction"},
      {"gram", "Gram trace form, radical containment and orbit constancy"},
      {"characters", "Torus characters, graded cohomology and the character identity"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, fn] : algebra_commands) {
    subs[name] = app.add_subcommand(name, help.at(name));
    AddSource(subs[name], src);
  }

  CLI::App* lift = app.add_subcommand("lift", "Second-order lift of a first-order deformation");
  AddSource(lift, src);
  std::string alpha_text, class_text;
  lift->add_option("--alpha", alpha_text, "Law entries [{i,j,k,c}] as JSON, or @file");
  lift->add_option("--class", class_text, "H^2 coordinates, comma separated");

  CLI::App* rich = app.add_subcommand("richardson", "The sl2 x Sym^{2n} anisotropy pipeline");
  std::size_t n = 7;
  bool full = false, slow = false;
  rich->add_option("--n", n, "Half the highest weight of the module");
  rich->add_flag("--full", full, "Build the full incidence complex");
  rich->add_flag("--slow", slow, "Same as --full");

  CLI::App* builtin = app.add_subcommand("builtin", "Print a builtin algebra as input JSON");
  std::string builtin_name;
  bool list = false;
  builtin->add_option("name", builtin_name, "Builtin name");
  builtin->add_flag("--list", list, "List the builtin algebras");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "deformcx: " << e.what() << "\n";
    return kExitSchema;
  }

  if (!qdual.empty()) opts.qdual_mode = ParseQdualMode(qdual);
  opts.rank_mode = mode == "modular" ? RankMode::kModular : RankMode::kExact;

  auto emit = [&](Json report) {
    if (format == "text") {
      out << RenderText(report);
    } else {
      out << report.dump(2) << "\n";
    }
  };

  const auto start = std::chrono::steady_clock::now();
  try {
    Json report;
    bool done = false;
    for (const auto& [name, fn] : algebra_commands) {
      if (subs[name]->parsed()) {
        report = fn(LoadInput(src, in));
        done = true;
      }
    }
    if (!done && lift->parsed()) {
      LiftRequest req;
      if (!alpha_text.empty()) req.alpha = LoadJsonArgument(alpha_text);
      if (!class_text.empty()) req.h2_coords = ParseRatList(class_text);
      report = CmdLift(LoadInput(src, in), req, opts);
    } else if (!done && rich->parsed()) {
      report = CmdRichardson(n, full || slow, opts);
    } else if (!done && builtin->parsed()) {
      if (list) {
        report = CmdBuiltinList();
      } else if (builtin_name.empty()) {
        throw ParseError("builtin: give a name or --list");
      } else {
        report = CmdBuiltin(builtin_name);
      }
    }
    if (timing) {
      report["timing_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    emit(std::move(report));
    return kExitOk;
  } catch (const Error& e) {
    Json j{{"error", e.kind()}, {"message", e.what()}};
    if (const auto* nl = dynamic_cast<const NotOnLocus*>(&e)) {
      std::vector<std::size_t> one_based;
      for (auto i : nl->nonzero_coordinates()) one_based.push_back(i + 1);
      j["nonzero_coordinates"] = one_based;
    }
    emit(j);
    err << "deformcx: " << e.kind() << ": " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const nlohmann::json::exception& e) {
    emit(Json{{"error", "ParseError"}, {"message", e.what()}});
    err << "deformcx: invalid JSON: " << e.what() << "\n";
    return kExitSchema;
  }
}

}  // namespace deformcx::cli
