// Copyright 2026 The anglekit Authors.
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
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "anglekit/dec_format.hpp"
#include "anglekit/error.hpp"
#include "anglekit/homology.hpp"
#include "anglekit/json_io.hpp"
#include "anglekit/normal.hpp"
#include "anglekit/subdivision.hpp"
#include "anglekit/tri_format.hpp"
#include "anglekit/verdict.hpp"

using namespace anglekit;

namespace {

constexpr int kInputError = 2;

Triangulation load_input(const std::string& path, BuildOptions options = {}) {
  if (std::filesystem::path(path).extension() == ".dec") return subdivide(load_dec(path)).triangulation;
  return load_tri(path, options);
}

Json read_json(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::SyntaxError, "cannot write " + path);
  out << text;
}

int cmd_validate(const std::string& input) {
  Json out;
  if (std::filesystem::path(input).extension() == ".dec") {
    Decomposition d = load_dec(input);
    validate_decomposition(d);
    out["decomposition"] = {{"polyhedra", d.polyhedra.size()}, {"gluings", d.gluings.size()}};
  }
  Triangulation t = load_input(input, BuildOptions{false});
  ValidationReport report = validate_triangulation(t);
  out["validation"] = to_json(report);
  out["triangulation"] = to_json(t);
  std::cout << dump(out);
  return report.ok() ? 0 : 1;
}

int cmd_subdivide(const std::string& input, const std::string& output, bool report) {
  Subdivision s = subdivide(load_dec(input));
  std::string tri = serialize_tri(s.triangulation);
  Json rep = to_json(s.report);
  rep["validation"] = to_json(validate_triangulation(s.triangulation));
  if (output.empty()) {
    std::cout << tri;
    if (report) std::cerr << dump(rep);
  } else {
    write_text(output, tri);
    if (report) std::cout << dump(rep);
  }
  return 0;
}

int cmd_angles(const std::string& input, const std::string& mode_name, const std::string& certificate) {
  Triangulation t = load_input(input);
  AngleMode mode = angle_mode_from_string(mode_name);
  if (mode == AngleMode::Taut) {
    auto taut = search_taut(t, SizeCaps::from_environment().taut_tets);
    Json out = {{"mode", "taut"}, {"status", taut ? "feasible" : "infeasible"}};
    if (taut) out["angles"] = to_json(*taut, t.size());
    std::cout << dump(out);
    return taut ? 0 : 1;
  }
  SolveResult r = solve_angles(t, mode);
  std::cout << dump(to_json(r, mode, t));
  if (!r.feasible && !certificate.empty())
    write_text(certificate, dump(certificate_to_json(assemble_angle_system(t), *r.certificate)));
  return r.feasible ? 0 : 1;
}

int cmd_normal(const std::string& input, bool kernel, const std::string& chistar, const std::string& check,
               const std::string& angles) {
  Triangulation t = load_input(input);
  if (kernel) {
    RationalMatrix q = compatibility_matrix(t);
    Json basis = Json::array();
    for (const auto& v : kernel_basis(q)) basis.push_back(to_json(v));
    std::cout << dump({{"order", coordinate_to_json({})["order"]},
                       {"rows", q.rows()},
                       {"columns", q.cols()},
                       {"dimension", basis.size()},
                       {"basis", basis}});
    return 0;
  }
  if (!chistar.empty()) {
    RationalVector s = coordinate_from_json(read_json(chistar), t.size());
    Json out = {{"chi_star", to_json(chi_star(t, s))},
                {"in_kernel", is_zero_vector(compatibility_matrix(t).multiply(s))}};
    if (!angles.empty()) out["chi_A"] = to_json(chi_A(t, angles_from_json(read_json(angles), t.size()), s));
    std::cout << dump(out);
    return 0;
  }
  if (check == "main1" || check == "prop0") {
    std::optional<AngleAssignment> a;
    if (!angles.empty()) a = angles_from_json(read_json(angles), t.size());
    auto mode = check == "main1" ? SufficiencyMode::Main1 : SufficiencyMode::Prop0;
    CheckReport report = check_sufficiency(t, mode, a, SizeCaps::from_environment());
    std::cout << dump(to_json(report));
    return report.holds ? 0 : 1;
  }
  throw Error(ErrorCode::SyntaxError, "normal needs --kernel, --chistar <file> or --check main1|prop0");
}

int cmd_check(const std::string& input, const std::string& criterion) {
  if (criterion != "homology") throw Error(ErrorCode::SyntaxError, "unknown criterion '" + criterion + "'");
  Json out = homology_report(compact_complex(load_input(input)));
  std::cout << dump(out);
  return out["zero_map"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angle structures on ideal and partially truncated triangulations"};
  app.require_subcommand(1);
  std::string input, output, mode = "strict", certificate, chistar, check, angles, criterion;
  bool report = false, kernel = false, explain = false;

  auto* validate = app.add_subcommand("validate", "check a .tri or .dec file");
  validate->add_option("input", input)->required();
  auto* sub = app.add_subcommand("subdivide", "turn a .dec decomposition into a .tri triangulation");
  sub->add_option("input", input)->required();
  sub->add_option("-o,--output", output, "output .tri path (default stdout)");
  sub->add_flag("--report", report, "print the subdivision report as JSON");
  auto* ang = app.add_subcommand("angles", "solve for an angle structure");
  ang->add_option("input", input)->required();
  ang->add_option("--mode", mode)->check(CLI::IsMember({"strict", "semi", "taut"}));
  ang->add_option("--certificate", certificate, "write the infeasibility certificate here");
  auto* normal = app.add_subcommand("normal", "normal surface coordinates");
  normal->add_option("input", input)->required();
  auto* g = normal->add_option_group("action")->require_option(1);
  g->add_flag("--kernel", kernel, "print a basis of the compatibility kernel");
  g->add_option("--chistar", chistar, "evaluate chi* on the coordinate in this JSON file");
  g->add_option("--check", check, "main1 or prop0")->check(CLI::IsMember({"main1", "prop0"}));
  normal->add_option("--angles", angles, "angle assignment JSON (required by prop0)");
  auto* chk = app.add_subcommand("check", "topological criteria");
  chk->add_option("input", input)->required();
  chk->add_option("--criterion", criterion)->required()->check(CLI::IsMember({"homology"}));
  auto* verdict = app.add_subcommand("verdict", "run the full pipeline and print a JSON report");
  verdict->add_option("input", input)->required();
  verdict->add_flag("--explain", explain, "run every check even when an angle structure is found");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*validate) return cmd_validate(input);
    if (*sub) return cmd_subdivide(input, output, report);
    if (*ang) return cmd_angles(input, mode, certificate);
    if (*normal) return cmd_normal(input, kernel, chistar, check, angles);
    if (*chk) return cmd_check(input, criterion);
    if (*verdict) {
      VerdictOptions options;
      options.explain = explain;
      Verdict v = run_verdict(input, options);
      std::cout << dump(v.report);
      return v.exit_code;
    }
  } catch (const std::exception& e) {
    Json err = {{"error", e.what()}};
    if (const auto* ae = dynamic_cast<const Error*>(&e)) err["code"] = to_string(ae->code());
    std::cerr << dump(err);
    return kInputError;
  }
  return kInputError;
}
