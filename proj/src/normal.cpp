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
#include "anglekit/normal.hpp"

#include <algorithm>

#include "anglekit/error.hpp"
#include "anglekit/extreme_points.hpp"
#include "anglekit/simplex.hpp"

namespace anglekit {

namespace {

constexpr const char* kPairingNames[3] = {"01|23", "02|13", "03|12"};

void require_length(const Triangulation& t, const RationalVector& s) {
  if (static_cast<int>(s.size()) != 7 * t.size())
    throw Error(ErrorCode::DimensionMismatch, "normal coordinate has " + std::to_string(s.size()) +
                                                  " entries, expected " +
                                                  std::to_string(7 * t.size()));
}

void require_angles(const Triangulation& t, const AngleAssignment& a) {
  if (static_cast<int>(a.alpha.size()) != 6 * t.size())
    throw Error(ErrorCode::DimensionMismatch, "angle assignment has " +
                                                  std::to_string(a.alpha.size()) +
                                                  " entries, expected " +
                                                  std::to_string(6 * t.size()));
}

}  // namespace

DiscType DiscType::from_column(int n, int column) {
  if (column < 0 || column >= 7 * n)
    throw Error(ErrorCode::MalformedIndex, "disc column " + std::to_string(column));
  if (column < 3 * n) return quad(column / 3, column % 3);
  column -= 3 * n;
  return triangle(column / 4, column % 4);
}

int DiscType::column(int n) const {
  return kind == Kind::Quad ? 3 * tet + index : 3 * n + 4 * tet + index;
}

std::vector<int> DiscType::edges() const {
  if (kind == Kind::Triangle) {
    auto e = corner_edges(index);
    return {e.begin(), e.end()};
  }
  std::vector<int> out;
  for (int e = 0; e < 6; ++e)
    if (e != index && e != opposite_edge(index)) out.push_back(e);
  return out;
}

std::string DiscType::name() const {
  if (kind == Kind::Triangle) return "T" + std::to_string(tet) + "." + std::to_string(index);
  return "Q" + std::to_string(tet) + "." + kPairingNames[index];
}

int quad_at_corner(int v, int f) {
  int e = edge_index(v, f);
  return std::min(e, opposite_edge(e));
}

RationalMatrix compatibility_matrix(const Triangulation& t) {
  const int n = t.size();
  RationalMatrix q(0, 7 * n);
  for (const auto& g : t.gluings()) {
    for (int v : face_vertices(g.a.face)) {
      RationalVector row(7 * n);
      int w = g.perm[v];
      row[DiscType::triangle(g.a.tet, v).column(n)] += 1;
      row[DiscType::quad(g.a.tet, quad_at_corner(v, g.a.face)).column(n)] += 1;
      row[DiscType::triangle(g.b.tet, w).column(n)] -= 1;
      row[DiscType::quad(g.b.tet, quad_at_corner(w, g.b.face)).column(n)] -= 1;
      q.append_row(row);
    }
  }
  return q;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& q) { return null_space(q); }

Rational disc_chi_star(const Triangulation& t, const DiscType& d, const BoundaryArcs& b) {
  Rational value = Rational(-(d.sides() - 2)) / 2;
  if (!b.empty()) value -= b.at(d.column(t.size())) / 2;
  for (int e : d.edges()) {
    int valence = t.valence(d.tet, e);
    if (valence == 0)
      throw Error(ErrorCode::ZeroValence, "edge " + std::to_string(e) + " of tetrahedron " +
                                              std::to_string(d.tet) + " has valence 0");
    value += Rational(1, valence);
  }
  return value;
}

Rational chi_star(const Triangulation& t, const RationalVector& s, const BoundaryArcs& b) {
  require_length(t, s);
  if (!b.empty() && b.size() != s.size())
    throw Error(ErrorCode::DimensionMismatch, "boundary arc table has the wrong length");
  Rational total = 0;
  for (int col = 0; col < static_cast<int>(s.size()); ++col)
    if (!s[col].is_zero()) total += s[col] * disc_chi_star(t, DiscType::from_column(t.size(), col), b);
  return total;
}

Rational combinatorial_area(const Triangulation& t, const AngleAssignment& a, const DiscType& d) {
  require_angles(t, a);
  if (d.tet < 0 || d.tet >= t.size())
    throw Error(ErrorCode::MalformedIndex, "disc in tetrahedron " + std::to_string(d.tet));
  Rational area = -(d.sides() - 2);
  for (int e : d.edges()) area += a.at(d.tet, e);
  return area;
}

Rational chi_A(const Triangulation& t, const AngleAssignment& a, const RationalVector& s) {
  require_length(t, s);
  require_angles(t, a);
  Rational total = 0;
  for (int tet = 0; tet < t.size(); ++tet)
    for (int k = 0; k < 4; ++k) {
      auto d = DiscType::triangle(tet, k);
      const Rational& y = s[d.column(t.size())];
      if (!y.is_zero()) total += y * combinatorial_area(t, a, d);
    }
  return total / 2;
}

Rational lt_identity_residual(const Triangulation& t, const AngleAssignment& a,
                              const RationalVector& s) {
  require_length(t, s);
  require_angles(t, a);
  auto report = validate_angles(t, a, AngleMode::Semi);
  if (!report.ok())
    throw Error(ErrorCode::PreconditionViolated,
                "not a semi-angle structure: " + report.first_failure()->name);
  if (!is_zero_vector(compatibility_matrix(t).multiply(s)))
    throw Error(ErrorCode::PreconditionViolated, "coordinate is not in the compatibility kernel");
  Rational quad_term = 0;
  for (int tet = 0; tet < t.size(); ++tet)
    for (int p = 0; p < 3; ++p) {
      auto d = DiscType::quad(tet, p);
      const Rational& x = s[d.column(t.size())];
      if (!x.is_zero()) quad_term += x * combinatorial_area(t, a, d);
    }
  return chi_star(t, s) - chi_A(t, a, s) - quad_term / 2;
}

std::vector<DiscType> vertical_quads(const Triangulation& t, const AngleAssignment& a) {
  std::vector<DiscType> out;
  for (int tet = 0; tet < t.size(); ++tet)
    for (int p = 0; p < 3; ++p)
      if (combinatorial_area(t, a, DiscType::quad(tet, p)).is_zero())
        out.push_back(DiscType::quad(tet, p));
  return out;
}

RationalVector link_coordinate(const Triangulation& t, int vertex_class) {
  if (vertex_class < 0 || vertex_class >= static_cast<int>(t.vertex_classes().size()))
    throw Error(ErrorCode::MalformedIndex, "vertex class " + std::to_string(vertex_class));
  RationalVector s(7 * t.size());
  for (auto [tet, v] : t.vertex_classes()[vertex_class].members)
    s[DiscType::triangle(tet, v).column(t.size())] += 1;
  return s;
}

IntegerizeResult integerize(const Triangulation& t, const RationalVector& s) {
  require_length(t, s);
  const int n = t.size();
  for (int col = 0; col < 3 * n; ++col)
    if (s[col] < 0)
      throw Error(ErrorCode::NegativeQuad,
                  DiscType::from_column(n, col).name() + " = " + to_string(s[col]));
  if (!is_zero_vector(compatibility_matrix(t).multiply(s)))
    throw Error(ErrorCode::PreconditionViolated, "coordinate is not in the compatibility kernel");

  IntegerizeResult r;
  r.scale = lcm_of_denominators(s);
  r.coordinate = s;
  for (auto& x : r.coordinate) x *= Rational(r.scale);
  for (const auto& vc : t.vertex_classes()) {
    Rational lowest = 0;
    for (auto [tet, v] : vc.members)
      lowest = std::min(lowest, r.coordinate[DiscType::triangle(tet, v).column(n)]);
    Integer lift = numerator(Rational(-lowest));
    for (auto [tet, v] : vc.members) r.coordinate[DiscType::triangle(tet, v).column(n)] += Rational(lift);
    r.link_multiples.push_back(lift);
  }
  r.is_zero = is_zero_vector(r.coordinate);
  return r;
}

namespace {

CheckReport check_main1(const Triangulation& t, const SizeCaps& caps) {
  const int n = t.size();
  CheckReport report;
  report.mode = SufficiencyMode::Main1;
  ConeConstraints c;
  for (int i = 0; i < 7 * n; ++i) c.nonnegative.push_back(i);
  for (int i = 0; i < 3 * n; ++i) c.normalization.push_back(i);
  ExtremePoints ep = cone_extreme_points(compatibility_matrix(t), c, caps.extreme_columns);
  report.vertex_count = static_cast<int>(ep.vertices.size());
  report.ray_count = static_cast<int>(ep.rays.size());

  bool vertices_ok = true;
  for (const auto& v : ep.vertices) {
    Rational x = chi_star(t, v);
    if (!report.worst_chi_star || x > *report.worst_chi_star) {
      report.worst_chi_star = x;
      report.witness = v;
    }
    if (x >= 0) vertices_ok = false;
  }
  bool rays_ok = true;
  for (const auto& r : ep.rays)
    if (chi_star(t, r) > 0) {
      rays_ok = false;
      if (report.witness.empty()) report.witness = r;
    }
  report.holds = vertices_ok && rays_ok;
  if (ep.vertices.empty())
    report.summary = "no normal coordinate with a quadrilateral; holds vacuously";
  else if (report.holds)
    report.summary = "chi* < 0 at every extreme point";
  else if (!vertices_ok)
    report.summary = "an extreme point has chi* >= 0";
  else
    report.summary = "a recession ray has chi* > 0";
  report.notes.push_back("quantified over nonnegative normal coordinates");
  if (t.has_hyperideal())
    report.notes.push_back(
        "with geodesic boundary the sign-free reading fails: subtracting boundary links raises chi*");
  return report;
}

CheckReport check_prop0(const Triangulation& t, const AngleAssignment& a) {
  const int n = t.size();
  CheckReport report;
  report.mode = SufficiencyMode::Prop0;
  auto semi = validate_angles(t, a, AngleMode::Semi);
  if (!semi.ok())
    throw Error(ErrorCode::PreconditionViolated,
                "not a semi-angle structure: " + semi.first_failure()->name);
  report.vertical = vertical_quads(t, a);
  if (report.vertical.empty()) {
    report.holds = true;
    report.summary = "angle structure guaranteed: no vertical quadrilaterals";
    return report;
  }
  LinearProgram lp;
  lp.A = compatibility_matrix(t);
  std::vector<bool> vertical(3 * n, false);
  for (const auto& d : report.vertical) vertical[d.column(n)] = true;
  for (int col = 0; col < 3 * n; ++col)
    if (!vertical[col]) {
      RationalVector row(7 * n);
      row[col] = 1;
      lp.A.append_row(row);
    }
  RationalVector norm(7 * n);
  for (int col = 0; col < 3 * n; ++col)
    if (vertical[col]) norm[col] = 1;
  lp.A.append_row(norm);
  lp.b.assign(lp.A.rows(), Rational(0));
  lp.b.back() = 1;
  lp.c.assign(7 * n, Rational(0));
  LpResult r = solve_lp(lp);
  if (r.status == LpStatus::Infeasible) {
    report.holds = true;
    report.summary = "angle structure guaranteed: no normal coordinate supported on vertical quadrilaterals";
  } else {
    report.holds = false;
    report.witness = r.x;
    report.summary = "a normal coordinate is supported on vertical quadrilaterals";
  }
  return report;
}

}  // namespace

CheckReport check_sufficiency(const Triangulation& t, SufficiencyMode mode,
                              const std::optional<AngleAssignment>& a, SizeCaps caps) {
  if (mode == SufficiencyMode::Main1) return check_main1(t, caps);
  if (!a) throw Error(ErrorCode::MissingSemiAngle, "prop0 needs a semi-angle structure");
  require_angles(t, *a);
  return check_prop0(t, *a);
}

}  // namespace anglekit
