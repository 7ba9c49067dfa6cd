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
#include "anglekit/verdict.hpp"

#include "anglekit/dec_format.hpp"
#include "anglekit/error.hpp"
#include "anglekit/homology.hpp"
#include "anglekit/normal.hpp"
#include "anglekit/subdivision.hpp"
#include "anglekit/tri_format.hpp"

namespace anglekit {

namespace {

constexpr const char* kSchema = "anglekit-verdict/1";

Json error_json(const std::exception& e) {
  Json out = {{"message", e.what()}};
  if (const auto* err = dynamic_cast<const Error*>(&e)) out["code"] = to_string(err->code());
  if (const auto* perr = dynamic_cast<const ParseError*>(&e)) {
    out["line"] = perr->line();
    out["column"] = perr->column();
  }
  return out;
}

// Runs one optional stage; size caps and precondition failures become a
// "skipped" record instead of aborting the verdict.
template <typename F>
Json guarded(F&& stage) {
  try {
    return stage();
  } catch (const Error& e) {
    return {{"status", "skipped"}, {"reason", error_json(e)}};
  }
}

}  // namespace

Verdict run_verdict(const std::filesystem::path& path, const VerdictOptions& options) {
  Verdict v;
  Json& r = v.report;
  r["schema"] = kSchema;
  r["input"] = {{"file", path.filename().string()}};

  std::optional<Triangulation> tri;
  try {
    if (path.extension() == ".dec") {
      r["input"]["format"] = "dec";
      Subdivision sub = subdivide(load_dec(path));
      r["subdivision"] = to_json(sub.report);
      tri = std::move(sub.triangulation);
    } else {
      r["input"]["format"] = "tri";
      TriData data = parse_tri(read_text_file(path));
      tri = build_triangulation(std::move(data.tets), std::move(data.gluings), BuildOptions{false});
    }
  } catch (const std::exception& e) {
    r["top_line"] = "input error";
    r["error"] = error_json(e);
    r["exit_code"] = v.exit_code;
    return v;
  }
  const Triangulation& t = *tri;
  r["triangulation"] = to_json(t);
  ValidationReport validation = validate_triangulation(t);
  r["validation"] = to_json(validation);
  if (!validation.ok()) {
    r["top_line"] = "input error";
    r["error"] = {{"message", "triangulation failed validation: " + validation.first_failure()->name}};
    r["exit_code"] = v.exit_code;
    return v;
  }

  Json criteria = Json::object();
  SolveResult strict = solve_angles(t, AngleMode::Strict);
  criteria["angle_structure"] = to_json(strict, AngleMode::Strict, t);
  criteria["angle_structure"]["role"] = "constructive witness or exact infeasibility certificate";

  if (!strict.feasible || options.explain) {
    SolveResult semi = solve_angles(t, AngleMode::Semi);
    criteria["semi_angle"] = to_json(semi, AngleMode::Semi, t);
    criteria["semi_angle"]["role"] = "input to the vertical-quad sufficiency check";

    criteria["taut"] = guarded([&]() -> Json {
      auto taut = search_taut(t, options.caps.taut_tets);
      Json out = {{"status", taut ? "found" : "none"}};
      if (taut) out["angles"] = to_json(*taut, t.size());
      return out;
    });

    criteria["prop0"] = guarded([&]() -> Json {
      if (!semi.feasible) throw Error(ErrorCode::MissingSemiAngle, "no semi-angle structure exists");
      Json out = to_json(check_sufficiency(t, SufficiencyMode::Prop0, semi.angles, options.caps));
      out["role"] = "sufficient: no normal class supported on vertical quads implies an angle structure";
      return out;
    });
    criteria["main1"] = guarded([&]() -> Json {
      Json out = to_json(check_sufficiency(t, SufficiencyMode::Main1, std::nullopt, options.caps));
      out["role"] = "sufficient: chi* < 0 on every nonnegative normal class with a quad implies an angle structure";
      return out;
    });
    criteria["homology"] = guarded([&]() -> Json {
      Json out = homology_report(compact_complex(t));
      out["role"] = "hypothesis: H1(M) -> H1(M, boundary) over Z/2 is the zero map";
      return out;
    });
  }
  r["criteria"] = criteria;

  if (strict.feasible) {
    r["top_line"] = "angle structure exists (constructive)";
    v.exit_code = 0;
  } else {
    r["top_line"] = "angle structure not established";
    v.exit_code = 1;
  }
  r["exit_code"] = v.exit_code;
  return v;
}

}  // namespace anglekit
