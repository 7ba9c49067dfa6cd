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
#include "anglekit/json_io.hpp"

#include "anglekit/error.hpp"

namespace anglekit {

namespace {

[[noreturn]] void bad_json(const std::string& what) { throw Error(ErrorCode::SyntaxError, what); }

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad_json("expected a rational string \"p/q\"");
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad_json("expected an array of rationals");
  RationalVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"ok", r.ok()}, {"checks", checks}};
}

Json to_json(const Triangulation& t) {
  Json kinds = Json::array();
  for (const auto& tet : t.tets()) kinds.push_back(to_string(tet.kind));
  Json valences = Json::array();
  for (const auto& e : t.edge_classes()) valences.push_back(e.valence());
  Json vertices = Json::array();
  for (int v = 0; v < static_cast<int>(t.vertex_classes().size()); ++v) {
    auto link = link_surface(t, v);
    vertices.push_back({{"class", v},
                        {"hyperideal", t.vertex_classes()[v].hyperideal},
                        {"corners", t.vertex_classes()[v].members.size()},
                        {"link_euler_characteristic", link.euler_characteristic()},
                        {"link_boundary_edges", link.boundary_edges}});
  }
  return {{"tetrahedra", t.size()},
          {"kinds", kinds},
          {"gluings", t.gluings().size()},
          {"edge_valences", valences},
          {"vertex_classes", vertices}};
}

Json to_json(const AngleAssignment& a, int tets) {
  Json out = Json::array();
  for (int t = 0; t < tets; ++t) {
    Json row = Json::array();
    for (int e = 0; e < 6; ++e) row.push_back(to_string(a.at(t, e)));
    out.push_back(row);
  }
  return out;
}

AngleAssignment angles_from_json(const Json& j, int tets) {
  const Json& body = j.is_object() ? j.at("angles") : j;
  if (!body.is_array()) bad_json("angles must be an array");
  AngleAssignment a;
  for (const auto& x : body) {
    if (x.is_array()) {
      if (x.size() != 6) bad_json("each tetrahedron needs 6 angles");
      for (const auto& y : x) a.alpha.push_back(rational_from_json(y));
    } else {
      a.alpha.push_back(rational_from_json(x));
    }
  }
  if (static_cast<int>(a.alpha.size()) != 6 * tets)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(6 * tets) + " angles, got " +
                                                  std::to_string(a.alpha.size()));
  return a;
}

RationalVector coordinate_from_json(const Json& j, int tets) {
  RationalVector s = vector_from_json(j.is_object() ? j.at("coordinates") : j);
  if (static_cast<int>(s.size()) != 7 * tets)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(7 * tets) + " coordinates, got " +
                                                  std::to_string(s.size()));
  return s;
}

Json coordinate_to_json(const RationalVector& s) {
  return {{"order", "quads by tet (01|23, 02|13, 03|12), then triangles by tet (corner 0..3)"},
          {"coordinates", to_json(s)}};
}

Json to_json(const SolveResult& r, AngleMode mode, const Triangulation& t) {
  Json out = {{"mode", to_string(mode)}, {"status", r.feasible ? "feasible" : "infeasible"}, {"slack", to_json(r.slack)}};
  if (r.feasible) {
    out["angles"] = to_json(r.angles, t.size());
    out["hyperideal_corner_sums"] = to_json(r.hyperideal_sums);
  } else if (r.certificate) {
    out["certificate"] = certificate_to_json(assemble_angle_system(t), *r.certificate);
  }
  out["lp_solves"] = r.lp_solves;
  return out;
}

Json certificate_to_json(const AngleSystem& s, const FarkasCertificate& c) {
  Json rows = Json::array();
  for (int r = 0; r < s.matrix.rows(); ++r) {
    const auto& label = s.rows[r];
    Json row;
    if (label.kind == AngleRow::Kind::Corner)
      row = {{"kind", "corner"}, {"tet", label.tet}, {"vertex", label.vertex}, {"hyperideal", label.hyperideal}};
    else
      row = {{"kind", "edge"}, {"edge_class", label.edge_class}};
    Json entries = Json::array();
    for (int col = 0; col < s.matrix.cols(); ++col)
      if (!s.matrix(r, col).is_zero()) entries.push_back({col, to_string(s.matrix(r, col))});
    row["rhs"] = to_string(s.rhs[r]);
    row["entries"] = entries;
    row["y"] = to_string(c.y.at(r));
    rows.push_back(row);
  }
  return {{"format", "anglekit-certificate"},
          {"version", 1},
          {"mode", to_string(c.mode)},
          {"columns", s.matrix.cols()},
          {"column_order", "tet-major, edges 01,02,03,12,13,23"},
          {"rows", rows}};
}

FarkasCertificate certificate_from_json(const Json& j) {
  FarkasCertificate c;
  c.mode = angle_mode_from_string(j.at("mode").get<std::string>());
  for (const auto& row : j.at("rows")) c.y.push_back(rational_from_json(row.at("y")));
  return c;
}

Json to_json(const CheckReport& r) {
  Json out = {{"mode", r.mode == SufficiencyMode::Main1 ? "main1" : "prop0"},
              {"holds", r.holds},
              {"summary", r.summary}};
  if (r.mode == SufficiencyMode::Main1) {
    out["extreme_points"] = r.vertex_count;
    out["recession_rays"] = r.ray_count;
    out["worst_chi_star"] = r.worst_chi_star ? to_json(*r.worst_chi_star) : Json(nullptr);
  } else {
    Json vertical = Json::array();
    for (const auto& d : r.vertical) vertical.push_back(d.name());
    out["vertical_quads"] = vertical;
  }
  out["witness"] = r.witness.empty() ? Json(nullptr) : to_json(r.witness);
  out["notes"] = r.notes;
  return out;
}

namespace {

Json chain_to_json(const Gf2Vector& z, const CellComplex& c) {
  Json out = Json::array();
  for (auto e = z.find_first(); e != Gf2Vector::npos; e = z.find_next(e)) out.push_back(c.edge_labels[e]);
  return out;
}

}  // namespace

Json to_json(const ZeroMapResult& z, const CellComplex& c) {
  Json matrix = Json::array();
  for (const auto& row : z.matrix) {
    Json r = Json::array();
    for (std::size_t i = 0; i < row.size(); ++i) r.push_back(row.test(i) ? 1 : 0);
    matrix.push_back(r);
  }
  Json witnesses = Json::array();
  if (z.witness) witnesses.push_back(chain_to_json(z.absolute_generators[*z.witness], c));
  return {{"zero_map", z.is_zero}, {"matrix", matrix}, {"witnesses", witnesses}};
}

Json homology_report(const CellComplex& c) {
  auto zero = zero_map_check(c);
  Json generators = Json::array();
  for (const auto& g : zero.absolute_generators) generators.push_back(chain_to_json(g, c));
  Json z = to_json(zero, c);
  return {{"h1_rank", h1_rank(c, HomologyMode::Absolute).rank},
          {"h1_boundary_rank", h1_rank(c, HomologyMode::Boundary).rank},
          {"h1_relative_rank", h1_rank(c, HomologyMode::Relative).rank},
          {"boundary_image_rank", boundary_image_rank(c)},
          {"zero_map", zero.is_zero},
          {"generators", generators},
          {"matrix", z["matrix"]},
          {"witnesses", z["witnesses"]}};
}

Json to_json(const SubdivisionReport& r) {
  Json pillows = Json::array();
  for (std::size_t i = 0; i < r.pillows.size(); ++i) {
    const auto& p = r.pillows[i];
    pillows.push_back({{"gluing", p.gluing},
                       {"face_a", std::to_string(p.a.poly) + "." + std::to_string(p.a.face)},
                       {"face_b", std::to_string(p.b.poly) + "." + std::to_string(p.b.face)},
                       {"v", p.v},
                       {"v_prime", p.v_prime},
                       {"path1", p.path1},
                       {"path2", p.path2},
                       {"flat_tets", r.flat_tets_per_pillow.at(i)},
                       {"informational", p.informational}});
  }
  return {{"tree_gluings", r.assignment.tree_gluings},
          {"cone_vertex", r.assignment.cone_vertex},
          {"prune_order", r.assignment.prune_order},
          {"face_apex", r.face_apex},
          {"cone_tets", r.cone_tets},
          {"flat_tets", r.flat_tets},
          {"pillows", pillows},
          {"tree_pillows", r.tree_pillows}};
}

AngleMode angle_mode_from_string(const std::string& s) {
  if (s == "strict") return AngleMode::Strict;
  if (s == "semi") return AngleMode::Semi;
  if (s == "taut") return AngleMode::Taut;
  throw Error(ErrorCode::SyntaxError, "unknown angle mode '" + s + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace anglekit
