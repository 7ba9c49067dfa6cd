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
#include "anglekit/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "anglekit/error.hpp"
#include "union_find.hpp"

namespace anglekit {

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  for (int e = 0; e < 6; ++e)
    if (kEdgeVertices[e][0] == a && kEdgeVertices[e][1] == b) return e;
  throw Error(ErrorCode::MalformedIndex,
              "no edge between vertices " + std::to_string(a) + " and " + std::to_string(b));
}

std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) out[k++] = v;
  return out;
}

std::array<int, 3> corner_edges(int v) {
  std::array<int, 3> out{};
  int k = 0;
  for (int e = 0; e < 6; ++e)
    if (kEdgeVertices[e][0] == v || kEdgeVertices[e][1] == v) out[k++] = e;
  return out;
}

const char* to_string(TetKind kind) {
  switch (kind) {
    case TetKind::Ideal: return "ideal";
    case TetKind::FlatIdeal: return "flat";
    case TetKind::Truncated13: return "trunc";
  }
  return "?";
}

const char* to_string(AngleMode mode) {
  switch (mode) {
    case AngleMode::Strict: return "strict";
    case AngleMode::Semi: return "semi";
    case AngleMode::Taut: return "taut";
  }
  return "?";
}

FaceGluing FaceGluing::from_images(FaceRef a, FaceRef b, std::array<int, 3> images) {
  FaceGluing g{a, b, {}};
  auto verts = face_vertices(a.face);
  for (int i = 0; i < 3; ++i) g.perm[verts[i]] = images[i];
  g.perm[a.face] = b.face;
  return g;
}

std::array<int, 3> FaceGluing::images() const {
  auto verts = face_vertices(a.face);
  return {perm[verts[0]], perm[verts[1]], perm[verts[2]]};
}

Perm4 FaceGluing::inverse() const {
  Perm4 inv{};
  for (int v = 0; v < 4; ++v) inv[perm[v]] = v;
  return inv;
}

std::vector<FaceRef> Triangulation::open_faces() const {
  std::vector<FaceRef> out;
  for (int t = 0; t < size(); ++t)
    for (int f = 0; f < 4; ++f)
      if (!neighbours_[4 * t + f]) out.push_back({t, f});
  return out;
}

bool Triangulation::has_hyperideal() const {
  return std::any_of(tets_.begin(), tets_.end(),
                     [](const Tetrahedron& t) { return t.kind == TetKind::Truncated13; });
}

namespace {

void check_tet(const Tetrahedron& t, int expected_id) {
  if (t.id != expected_id)
    throw Error(ErrorCode::MalformedIndex, "tetrahedron ids must be 0..n-1 in order; got " +
                                               std::to_string(t.id) + " at position " +
                                               std::to_string(expected_id));
  bool trunc = t.kind == TetKind::Truncated13;
  if (trunc && (t.hyperideal_vertex < 0 || t.hyperideal_vertex > 3))
    throw Error(ErrorCode::MalformedIndex,
                "truncated tetrahedron " + std::to_string(t.id) + " needs a hyperideal vertex in 0..3");
  if (!trunc && t.hyperideal_vertex != -1)
    throw Error(ErrorCode::MalformedIndex,
                "tetrahedron " + std::to_string(t.id) + " is not truncated but names a hyperideal vertex");
}

void check_gluing(const FaceGluing& g, int n) {
  auto in_range = [n](FaceRef f) { return f.tet >= 0 && f.tet < n && f.face >= 0 && f.face < 4; };
  if (!in_range(g.a) || !in_range(g.b))
    throw Error(ErrorCode::MalformedIndex, "gluing refers to a nonexistent face");
  std::array<bool, 4> seen{};
  for (int v = 0; v < 4; ++v) {
    if (g.perm[v] < 0 || g.perm[v] > 3 || seen[g.perm[v]])
      throw Error(ErrorCode::MalformedIndex, "gluing permutation is not a bijection");
    seen[g.perm[v]] = true;
  }
  if (g.perm[g.a.face] != g.b.face)
    throw Error(ErrorCode::MalformedIndex, "gluing does not map face vertices onto face vertices");
}

}  // namespace

Triangulation build_triangulation(std::vector<Tetrahedron> tets, std::vector<FaceGluing> gluings,
                                  BuildOptions options) {
  const int n = static_cast<int>(tets.size());
  for (int i = 0; i < n; ++i) check_tet(tets[i], i);

  Triangulation tri;
  tri.neighbours_.assign(4 * n, std::nullopt);
  for (int gi = 0; gi < static_cast<int>(gluings.size()); ++gi) {
    const FaceGluing& g = gluings[gi];
    check_gluing(g, n);
    if (g.a == g.b)
      throw Error(ErrorCode::DuplicateGluing, "face glued to itself");
    for (FaceRef f : {g.a, g.b})
      if (tri.neighbours_[4 * f.tet + f.face])
        throw Error(ErrorCode::DuplicateGluing, "face " + std::to_string(f.tet) + "." +
                                                    std::to_string(f.face) + " glued twice");
    if (options.enforce_vertex_kinds) {
      for (int v : face_vertices(g.a.face))
        if (tets[g.a.tet].is_hyperideal(v) != tets[g.b.tet].is_hyperideal(g.perm[v]))
          throw Error(ErrorCode::IdealHyperidealMismatch,
                      "gluing " + std::to_string(gi) + " maps vertex " + std::to_string(v) +
                          " of tet " + std::to_string(g.a.tet) + " to a vertex of another kind");
    }
    tri.neighbours_[4 * g.a.tet + g.a.face] = Neighbour{g.b, g.perm, gi};
    tri.neighbours_[4 * g.b.tet + g.b.face] = Neighbour{g.a, g.inverse(), gi};
  }

  detail::UnionFind edges(6 * n);
  detail::UnionFind verts(4 * n);
  for (const auto& g : gluings) {
    auto fv = face_vertices(g.a.face);
    for (int v : fv) verts.unite(4 * g.a.tet + v, 4 * g.b.tet + g.perm[v]);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        edges.unite(6 * g.a.tet + edge_index(fv[i], fv[j]),
                    6 * g.b.tet + edge_index(g.perm[fv[i]], g.perm[fv[j]]));
  }
  tri.edge_class_ = edges.labels();
  tri.vertex_class_ = verts.labels();

  int ne = tri.edge_class_.empty() ? 0 : *std::max_element(tri.edge_class_.begin(), tri.edge_class_.end()) + 1;
  tri.edge_classes_.resize(ne);
  for (int i = 0; i < 6 * n; ++i) tri.edge_classes_[tri.edge_class_[i]].members.emplace_back(i / 6, i % 6);

  int nv = tri.vertex_class_.empty() ? 0 : *std::max_element(tri.vertex_class_.begin(), tri.vertex_class_.end()) + 1;
  tri.vertex_classes_.resize(nv);
  for (int i = 0; i < 4 * n; ++i) {
    auto& cls = tri.vertex_classes_[tri.vertex_class_[i]];
    cls.members.emplace_back(i / 4, i % 4);
    if (tets[i / 4].is_hyperideal(i % 4)) cls.hyperideal = true;
  }

  tri.tets_ = std::move(tets);
  tri.gluings_ = std::move(gluings);
  return tri;
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const Check* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const Check* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string face_name(FaceRef f) { return std::to_string(f.tet) + "." + std::to_string(f.face); }

// Walks around the edge class containing (tet, edge) and reports whether the
// walk either closes up consistently or runs between two open faces while
// visiting every member exactly once.
bool edge_walk_closes(const Triangulation& t, int tet, int edge, std::string& why) {
  struct State {
    int tet, a, b, exit_face;
  };
  auto other_two = [](int a, int b) {
    std::array<int, 2> r{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
      if (v != a && v != b) r[k++] = v;
    return r;
  };
  auto walk = [&](State s, std::set<std::pair<int, int>>& seen, bool& closed) {
    const State start = s;
    closed = false;
    for (int steps = 0;; ++steps) {
      if (steps > 6 * t.size() + 1) {
        why = "walk does not terminate";
        return false;
      }
      auto nb = t.neighbour({s.tet, s.exit_face});
      if (!nb) return true;
      State next{nb->face.tet, nb->perm[s.a], nb->perm[s.b], -1};
      int entry = nb->face.face;
      auto rest = other_two(next.a, next.b);
      next.exit_face = rest[0] == entry ? rest[1] : rest[0];
      int e = edge_index(next.a, next.b);
      if (next.tet == start.tet && e == edge_index(start.a, start.b)) {
        if (next.a == start.a && next.exit_face == start.exit_face) {
          closed = true;
          return true;
        }
        why = "edge of tet " + std::to_string(start.tet) + " is identified with itself reversed";
        return false;
      }
      if (!seen.insert({next.tet, e}).second) {
        why = "edge walk revisits tet " + std::to_string(next.tet) + " edge " + std::to_string(e);
        return false;
      }
      s = next;
    }
  };

  auto [a, b] = kEdgeVertices[edge];
  auto rest = other_two(a, b);
  std::set<std::pair<int, int>> seen{{tet, edge}};
  bool closed = false;
  if (!walk({tet, a, b, rest[1]}, seen, closed)) return false;
  if (!closed && !walk({tet, a, b, rest[0]}, seen, closed)) return false;
  const auto& cls = t.edge_classes()[t.edge_class_of(tet, edge)];
  if (static_cast<int>(seen.size()) != cls.valence()) {
    why = "walk visits " + std::to_string(seen.size()) + " of " + std::to_string(cls.valence()) +
          " incidences";
    return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_triangulation(const Triangulation& t) {
  ValidationReport report;

  Check closure{"edge-orbit closure", true, ""};
  for (int c = 0; c < static_cast<int>(t.edge_classes().size()); ++c) {
    auto [tet, edge] = t.edge_classes()[c].members.front();
    std::string why;
    if (!edge_walk_closes(t, tet, edge, why)) {
      closure.passed = false;
      closure.detail = "edge class " + std::to_string(c) + ": " + why;
      break;
    }
  }
  report.checks.push_back(closure);

  Check kinds{"vertex-kind homogeneity", true, ""};
  for (int c = 0; c < static_cast<int>(t.vertex_classes().size()); ++c) {
    const auto& cls = t.vertex_classes()[c];
    bool any_hyper = false, any_ideal = false;
    for (auto [tet, v] : cls.members) (t.tet(tet).is_hyperideal(v) ? any_hyper : any_ideal) = true;
    if (any_hyper && any_ideal) {
      kinds.passed = false;
      kinds.detail = "kind mismatch: vertex class " + std::to_string(c) +
                     " mixes ideal and hyperideal vertices";
      break;
    }
  }
  report.checks.push_back(kinds);

  // Truncation triangles are not among the indexed faces, so no gluing can
  // reach one; the check is kept so reports list the full inventory.
  report.checks.push_back({"external faces unglued", true, ""});

  Check open{"internal faces glued", true, ""};
  auto faces = t.open_faces();
  if (!faces.empty()) {
    open.passed = false;
    open.detail = "open internal face";
    for (std::size_t i = 0; i < faces.size(); ++i) open.detail += (i ? ", " : ": ") + face_name(faces[i]);
  }
  report.checks.push_back(open);
  return report;
}

ValidationReport validate_angles(const Triangulation& t, const AngleAssignment& a, AngleMode mode) {
  const int n = t.size();
  if (static_cast<int>(a.alpha.size()) != 6 * n)
    throw Error(ErrorCode::DimensionMismatch, "angle assignment has " + std::to_string(a.alpha.size()) +
                                                  " entries, expected " + std::to_string(6 * n));
  ValidationReport report;

  Check range{"range", true, ""};
  for (int i = 0; i < 6 * n && range.passed; ++i) {
    const Rational& x = a.alpha[i];
    bool ok = true;
    switch (mode) {
      case AngleMode::Strict: ok = x > 0 && x < 1; break;
      case AngleMode::Semi: ok = x >= 0 && x <= 1; break;
      case AngleMode::Taut: ok = x == 0 || x == 1; break;
    }
    if (!ok) {
      range.passed = false;
      range.detail = "angle " + std::to_string(i / 6) + "." + std::to_string(i % 6) + " = " +
                     to_string(x) + " outside the " + to_string(mode) + " range";
    }
  }
  report.checks.push_back(range);

  for (int tet = 0; tet < n; ++tet) {
    for (int v = 0; v < 4; ++v) {
      Rational sum = 0;
      for (int e : corner_edges(v)) sum += a.at(tet, e);
      bool hyper = t.tet(tet).is_hyperideal(v);
      Check c{"corner " + std::to_string(tet) + "." + std::to_string(v), hyper ? sum < 1 : sum == 1, ""};
      if (!c.passed)
        c.detail = "corner sum " + to_string(sum) + (hyper ? " is not < 1" : " != 1");
      report.checks.push_back(c);
    }
  }

  for (int c = 0; c < static_cast<int>(t.edge_classes().size()); ++c) {
    Rational sum = 0;
    for (auto [tet, e] : t.edge_classes()[c].members) sum += a.at(tet, e);
    Check chk{"edge class " + std::to_string(c), sum == 2, ""};
    if (!chk.passed) chk.detail = "edge sum " + to_string(sum) + " != 2";
    report.checks.push_back(chk);
  }
  return report;
}

LinkSummary link_surface(const Triangulation& t, int vertex_class) {
  const auto& cls = t.vertex_classes().at(vertex_class);
  const int n = t.size();
  // Link edges: (tet, corner, face) with face != corner; link vertices:
  // (tet, corner, other vertex), i.e. the corner's end of a tet edge.
  auto edge_id = [](int tet, int k, int f) { return 16 * tet + 4 * k + f; };
  auto vert_id = [](int tet, int k, int j) { return 16 * tet + 4 * k + j; };
  detail::UnionFind ledges(16 * n), lverts(16 * n);
  std::set<int> used_edges, used_verts;
  int boundary = 0;
  for (auto [tet, k] : cls.members) {
    for (int f = 0; f < 4; ++f) {
      if (f == k) continue;
      used_edges.insert(edge_id(tet, k, f));
      used_verts.insert(vert_id(tet, k, f));
      auto nb = t.neighbour({tet, f});
      if (!nb) {
        ++boundary;
        continue;
      }
      ledges.unite(edge_id(tet, k, f), edge_id(nb->face.tet, nb->perm[k], nb->face.face));
      for (int j : face_vertices(f))
        if (j != k) lverts.unite(vert_id(tet, k, j), vert_id(nb->face.tet, nb->perm[k], nb->perm[j]));
    }
  }
  std::set<int> edge_roots, vert_roots;
  for (int e : used_edges) edge_roots.insert(ledges.find(e));
  for (int v : used_verts) vert_roots.insert(lverts.find(v));
  LinkSummary s;
  s.faces = static_cast<int>(cls.members.size());
  s.edges = static_cast<int>(edge_roots.size());
  s.vertices = static_cast<int>(vert_roots.size());
  s.boundary_edges = boundary;
  return s;
}

}  // namespace anglekit
