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
#include "anglekit/angles.hpp"

#include <cstdlib>
#include <string>

#include "anglekit/error.hpp"
#include "anglekit/simplex.hpp"

namespace anglekit {

SizeCaps SizeCaps::from_environment() {
  SizeCaps caps;
  if (const char* env = std::getenv("ANGLEKIT_SIZE_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 100000) {
      caps.taut_tets = static_cast<int>(v);
      caps.extreme_columns = static_cast<int>(7 * v);
    }
  }
  return caps;
}

int AngleSystem::corner_rows() const {
  int k = 0;
  for (const auto& r : rows)
    if (r.kind == AngleRow::Kind::Corner) ++k;
  return k;
}

std::vector<int> AngleSystem::hyperideal_rows() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    if (rows[i].hyperideal) out.push_back(i);
  return out;
}

AngleSystem assemble_angle_system(const Triangulation& t) {
  const int n = t.size();
  const int m = static_cast<int>(t.edge_classes().size());
  AngleSystem s;
  s.matrix = RationalMatrix(4 * n + m, 6 * n);
  for (int tet = 0; tet < n; ++tet)
    for (int v = 0; v < 4; ++v) {
      int row = 4 * tet + v;
      for (int e : corner_edges(v)) s.matrix(row, 6 * tet + e) = 1;
      s.rhs.push_back(1);
      s.rows.push_back({AngleRow::Kind::Corner, tet, v, -1, t.tet(tet).is_hyperideal(v)});
    }
  for (int c = 0; c < m; ++c) {
    for (auto [tet, e] : t.edge_classes()[c].members) s.matrix(4 * n + c, 6 * tet + e) += 1;
    s.rhs.push_back(2);
    s.rows.push_back({AngleRow::Kind::Edge, -1, -1, c, false});
  }
  return s;
}

bool verify_certificate(const AngleSystem& system, const FarkasCertificate& c) {
  if (static_cast<int>(c.y.size()) != system.matrix.rows())
    throw Error(ErrorCode::DimensionMismatch, "certificate has " + std::to_string(c.y.size()) +
                                                  " entries, system has " +
                                                  std::to_string(system.matrix.rows()) + " rows");
  RationalVector w = system.matrix.multiply_transpose(c.y);
  bool nonzero = false;
  for (const auto& x : w) {
    if (x > 0) return false;
    if (x < 0) nonzero = true;
  }
  bool hyper_negative = false;
  for (int r : system.hyperideal_rows()) {
    if (c.y[r] > 0) return false;
    if (c.y[r] < 0) hyper_negative = true;
  }
  Rational value = dot(c.y, system.rhs);
  if (c.mode == AngleMode::Semi) return value > 0 || (value >= 0 && hyper_negative);
  return (nonzero || hyper_negative) && value >= 0;
}

FarkasCertificate normalized(FarkasCertificate c) {
  c.y = primitive_integer(c.y);
  return c;
}

namespace {

// Columns: alpha-part (6n), hyperideal slack part (H), optional bound column.
struct LpLayout {
  int angles = 0;
  int slacks = 0;
  bool bound_column = false;
  int bound() const { return angles + slacks; }
  int width() const { return angles + slacks + (bound_column ? 1 : 0); }
};

// strict: x = x' + eps on every angle and every hyperideal slack.
// semi:   angles >= 0, slacks = s' + delta.
LinearProgram build_lp(const AngleSystem& s, const LpLayout& layout, bool bound_on_angles) {
  const auto hyper = s.hyperideal_rows();
  LinearProgram lp;
  lp.A = RationalMatrix(s.matrix.rows(), layout.width());
  for (int r = 0; r < s.matrix.rows(); ++r)
    for (int j = 0; j < layout.angles; ++j) lp.A(r, j) = s.matrix(r, j);
  for (int k = 0; k < layout.slacks; ++k) lp.A(hyper[k], layout.angles + k) = 1;
  if (layout.bound_column) {
    for (int r = 0; r < s.matrix.rows(); ++r) {
      Rational sum = 0;
      if (bound_on_angles)
        for (int j = 0; j < layout.angles; ++j) sum += s.matrix(r, j);
      lp.A(r, layout.bound()) = sum;
    }
    for (int k = 0; k < layout.slacks; ++k) lp.A(hyper[k], layout.bound()) += 1;
  }
  lp.b = s.rhs;
  lp.c = RationalVector(layout.width());
  if (layout.bound_column) lp.c[layout.bound()] = 1;
  return lp;
}

// A Farkas ray from phase one may have B'^T y == 0 when the equations are
// inconsistent even without sign constraints; adding a corner row makes the
// transpose nonzero while keeping y . rhs >= 0.
RationalVector strict_from_ray(const AngleSystem& s, const LinearProgram& lp, RationalVector y,
                               int structural_columns) {
  RationalVector w = lp.A.multiply_transpose(y);
  bool zero = true;
  for (int j = 0; j < structural_columns; ++j)
    if (!w[j].is_zero()) zero = false;
  if (!zero) return y;
  Rational value = dot(y, s.rhs);
  for (auto& v : y) v /= value;
  y[0] -= 1;
  return y;
}

void fill_hyper_sums(const AngleSystem& s, const AngleAssignment& a, SolveResult& out) {
  for (int r : s.hyperideal_rows()) out.hyperideal_sums.push_back(dot(s.matrix.row(r), a.alpha));
}

SolveResult solve_strict(const Triangulation& t, const AngleSystem& s) {
  LpLayout layout{6 * t.size(), static_cast<int>(s.hyperideal_rows().size()), true};
  LinearProgram lp = build_lp(s, layout, true);
  LpResult r = solve_lp(lp);
  SolveResult out;
  out.lp_solves = 1;
  if (r.status == LpStatus::Optimal && r.objective > 0) {
    out.feasible = true;
    out.slack = r.objective;
    out.angles.alpha.resize(layout.angles);
    for (int j = 0; j < layout.angles; ++j) out.angles.alpha[j] = r.x[j] + r.objective;
    fill_hyper_sums(s, out.angles, out);
    return out;
  }
  FarkasCertificate cert{AngleMode::Strict, {}};
  if (r.status == LpStatus::Optimal) {
    out.slack = r.objective;
    cert.y = r.dual;
    for (auto& v : cert.y) v = -v;
  } else {
    out.slack = 0;
    cert.y = strict_from_ray(s, lp, r.farkas, layout.bound());
  }
  out.certificate = normalized(std::move(cert));
  return out;
}

SolveResult solve_semi(const Triangulation& t, const AngleSystem& s) {
  const int hyper = static_cast<int>(s.hyperideal_rows().size());
  LpLayout layout{6 * t.size(), hyper, hyper > 0};
  LinearProgram lp = build_lp(s, layout, false);
  LpResult r = solve_lp(lp);
  SolveResult out;
  out.lp_solves = 1;

  if (r.status == LpStatus::Infeasible) {
    out.certificate = normalized({AngleMode::Semi, r.farkas});
    return out;
  }
  if (hyper > 0 && r.objective <= 0) {
    FarkasCertificate cert{AngleMode::Semi, r.dual};
    for (auto& v : cert.y) v = -v;
    out.certificate = normalized(std::move(cert));
    return out;
  }

  // Relative interior of {alpha >= 0, s >= 0 : B alpha + E s = rhs}: the
  // average of per-coordinate maximisers has the largest possible support.
  LpLayout plain{layout.angles, hyper, false};
  LinearProgram face = build_lp(s, plain, false);
  std::vector<RationalVector> points;
  RationalVector first = r.x;
  first.resize(plain.width());
  if (hyper > 0)
    for (int k = 0; k < hyper; ++k) first[plain.angles + k] += r.x[layout.bound()];
  points.push_back(first);
  std::vector<bool> covered(plain.width(), false);
  auto cover = [&](const RationalVector& p) {
    for (int j = 0; j < plain.width(); ++j)
      if (p[j] > 0) covered[j] = true;
  };
  cover(first);
  for (int j = 0; j < plain.width(); ++j) {
    if (covered[j]) continue;
    face.c.assign(plain.width(), Rational(0));
    face.c[j] = 1;
    LpResult rj = solve_lp(face);
    ++out.lp_solves;
    if (rj.status == LpStatus::Optimal && rj.objective > 0) {
      points.push_back(rj.x);
      cover(rj.x);
    }
  }
  RationalVector mean(plain.width());
  for (const auto& p : points)
    for (int j = 0; j < plain.width(); ++j) mean[j] += p[j];
  for (auto& v : mean) v /= static_cast<int>(points.size());

  out.feasible = true;
  out.slack = hyper > 0 ? r.objective : Rational(0);
  out.angles.alpha.assign(mean.begin(), mean.begin() + plain.angles);
  fill_hyper_sums(s, out.angles, out);
  return out;
}

}  // namespace

SolveResult solve_angles(const Triangulation& t, AngleMode mode) {
  if (t.size() == 0) throw Error(ErrorCode::PreconditionViolated, "empty triangulation");
  AngleSystem s = assemble_angle_system(t);
  switch (mode) {
    case AngleMode::Strict: return solve_strict(t, s);
    case AngleMode::Semi: return solve_semi(t, s);
    case AngleMode::Taut: break;
  }
  throw Error(ErrorCode::PreconditionViolated, "taut structures are found by search_taut");
}

std::optional<AngleAssignment> search_taut(const Triangulation& t, int cap) {
  const int n = t.size();
  if (n > cap)
    throw Error(ErrorCode::SizeCap, std::to_string(n) + " tetrahedra exceed the taut search cap of " +
                                        std::to_string(cap));
  for (const auto& tet : t.tets())
    if (tet.kind == TetKind::Truncated13) return std::nullopt;

  const int m = static_cast<int>(t.edge_classes().size());
  std::vector<int> filled(m, 0), remaining(m, 0);
  for (int c = 0; c < m; ++c) remaining[c] = t.edge_classes()[c].valence();
  std::vector<int> pattern(n, -1);

  // Pattern p puts value 1 on edges p and 5 - p, an opposite pair.
  auto step = [&](int tet, int p, int sign) {
    for (int e = 0; e < 6; ++e) {
      int c = t.edge_class_of(tet, e);
      remaining[c] -= sign;
      if (e == p || e == opposite_edge(p)) filled[c] += sign;
    }
  };
  auto consistent = [&](int tet) {
    for (int e = 0; e < 6; ++e) {
      int c = t.edge_class_of(tet, e);
      if (filled[c] > 2 || filled[c] + remaining[c] < 2) return false;
    }
    return true;
  };

  int tet = 0;
  while (tet >= 0) {
    if (tet == n) break;
    if (pattern[tet] >= 0) step(tet, pattern[tet], -1);
    ++pattern[tet];
    if (pattern[tet] > 2) {
      pattern[tet] = -1;
      --tet;
      continue;
    }
    step(tet, pattern[tet], +1);
    if (consistent(tet)) ++tet;
  }
  if (tet < 0) return std::nullopt;
  for (int c = 0; c < m; ++c)
    if (filled[c] != 2) return std::nullopt;

  AngleAssignment a;
  a.alpha.assign(6 * n, Rational(0));
  for (int i = 0; i < n; ++i) {
    a.at(i, pattern[i]) = 1;
    a.at(i, opposite_edge(pattern[i])) = 1;
  }
  return a;
}

}  // namespace anglekit
