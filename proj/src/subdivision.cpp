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
#include "anglekit/subdivision.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "anglekit/error.hpp"

namespace anglekit {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidDecomposition, what); }

std::string face_name(PolyFace f) { return std::to_string(f.poly) + "." + std::to_string(f.face); }

Triangle sorted_triangle(int a, int b, int c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

int position(const std::vector<int>& cycle, int v) {
  auto it = std::find(cycle.begin(), cycle.end(), v);
  return it == cycle.end() ? -1 : static_cast<int>(it - cycle.begin());
}

}  // namespace

int Polyhedron::hyperideal_vertex() const {
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
    if (vertices[v] == VertexKind::Hyperideal) return v;
  return -1;
}

bool Polyhedron::face_contains(int face, int v) const { return position(faces.at(face), v) >= 0; }

int PolyGluing::image(int v) const {
  for (auto [x, y] : map)
    if (x == v) return y;
  return -1;
}

int PolyGluing::preimage(int w) const {
  for (auto [x, y] : map)
    if (y == w) return x;
  return -1;
}

void validate_decomposition(const Decomposition& d) {
  if (d.polyhedra.empty()) invalid("no polyhedra");
  for (int i = 0; i < static_cast<int>(d.polyhedra.size()); ++i) {
    const auto& p = d.polyhedra[i];
    if (p.id != i) invalid("polyhedron ids must be 0..n-1 in order");
    const int k = static_cast<int>(p.vertices.size());
    int hyper = 0;
    for (auto kind : p.vertices)
      if (kind == VertexKind::Hyperideal) ++hyper;
    if (hyper > 1) invalid("polyhedron " + std::to_string(i) + " has more than one hyperideal vertex");
    std::map<std::pair<int, int>, int> edge_faces;
    for (int f = 0; f < static_cast<int>(p.faces.size()); ++f) {
      const auto& c = p.faces[f];
      if (c.size() < 3) invalid("face " + face_name({i, f}) + " has fewer than 3 vertices");
      std::set<int> seen(c.begin(), c.end());
      if (seen.size() != c.size()) invalid("face " + face_name({i, f}) + " repeats a vertex");
      for (int v : c)
        if (v < 0 || v >= k) invalid("face " + face_name({i, f}) + " uses unknown vertex " + std::to_string(v));
      for (std::size_t j = 0; j < c.size(); ++j) {
        int a = c[j], b = c[(j + 1) % c.size()];
        ++edge_faces[{std::min(a, b), std::max(a, b)}];
      }
    }
    for (auto [edge, count] : edge_faces)
      if (count != 2)
        invalid("edge " + std::to_string(edge.first) + "-" + std::to_string(edge.second) +
                " of polyhedron " + std::to_string(i) + " lies in " + std::to_string(count) + " faces");
  }
  std::set<PolyFace> used;
  for (const auto& g : d.gluings) {
    for (PolyFace f : {g.a, g.b}) {
      if (f.poly < 0 || f.poly >= static_cast<int>(d.polyhedra.size()) || f.face < 0 ||
          f.face >= static_cast<int>(d.polyhedra[f.poly].faces.size()))
        invalid("gluing names unknown face " + face_name(f));
      if (!used.insert(f).second) invalid("face " + face_name(f) + " glued twice");
    }
    const auto& pa = d.polyhedra[g.a.poly];
    const auto& pb = d.polyhedra[g.b.poly];
    const auto& ca = pa.faces[g.a.face];
    const auto& cb = pb.faces[g.b.face];
    if (ca.size() != cb.size() || g.map.size() != ca.size())
      invalid("gluing " + face_name(g.a) + " " + face_name(g.b) + " has mismatched sizes");
    std::set<int> from, to;
    for (auto [x, y] : g.map) {
      if (position(ca, x) < 0 || position(cb, y) < 0)
        invalid("gluing " + face_name(g.a) + " " + face_name(g.b) + " maps vertices off the faces");
      if (pa.vertices[x] != pb.vertices[y])
        invalid("gluing " + face_name(g.a) + " " + face_name(g.b) + " mixes ideal and hyperideal vertices");
      from.insert(x);
      to.insert(y);
    }
    if (from.size() != ca.size() || to.size() != cb.size())
      invalid("gluing " + face_name(g.a) + " " + face_name(g.b) + " is not a bijection");
    const std::size_t n = ca.size();
    for (std::size_t j = 0; j < n; ++j) {
      int x = g.image(ca[j]), y = g.image(ca[(j + 1) % n]);
      int px = position(cb, x), py = position(cb, y);
      if ((px + 1) % static_cast<int>(n) != py && (py + 1) % static_cast<int>(n) != px)
        invalid("gluing " + face_name(g.a) + " " + face_name(g.b) + " does not preserve the face cycle");
    }
  }
}

DualGraph dual_graph(const Decomposition& d) {
  DualGraph g;
  g.nodes = static_cast<int>(d.polyhedra.size());
  for (const auto& gl : d.gluings) g.edges.emplace_back(gl.a.poly, gl.b.poly);
  return g;
}

ConeAssignment maximal_tree_cone_assignment(const Decomposition& d) {
  const DualGraph g = dual_graph(d);
  const int n = g.nodes;
  ConeAssignment out;
  out.cone_vertex.assign(n, -1);
  if (n == 0) return out;

  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    incident[g.edges[e].first].push_back(e);
    if (g.edges[e].second != g.edges[e].first) incident[g.edges[e].second].push_back(e);
  }
  std::vector<bool> seen(n, false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int e : incident[u]) {
      int w = g.edges[e].first == u ? g.edges[e].second : g.edges[e].first;
      if (seen[w]) continue;
      seen[w] = true;
      out.tree_gluings.push_back(e);
      queue.push(w);
    }
  }
  for (int u = 0; u < n; ++u)
    if (!seen[u]) throw Error(ErrorCode::DisconnectedDualGraph, "polyhedron " + std::to_string(u) + " is unreachable from polyhedron 0");
  std::sort(out.tree_gluings.begin(), out.tree_gluings.end());

  std::vector<std::vector<int>> tree(n);
  for (int e : out.tree_gluings) {
    tree[g.edges[e].first].push_back(e);
    tree[g.edges[e].second].push_back(e);
  }
  std::vector<bool> removed(n, false), edge_removed(g.edges.size(), false);
  auto degree = [&](int u) {
    int k = 0;
    for (int e : tree[u])
      if (!edge_removed[e]) ++k;
    return k;
  };
  for (int remaining = n; remaining > 1; --remaining) {
    int leaf = -1;
    for (int u = 0; u < n && leaf < 0; ++u)
      if (!removed[u] && degree(u) == 1) leaf = u;
    int edge = -1;
    for (int e : tree[leaf])
      if (!edge_removed[e]) edge = e;
    const auto& p = d.polyhedra[leaf];
    if (p.truncated()) {
      out.cone_vertex[leaf] = p.hyperideal_vertex();
    } else {
      const auto& gl = d.gluings[edge];
      int face = gl.a.poly == leaf ? gl.a.face : gl.b.face;
      for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v)
        if (!p.face_contains(face, v)) {
          out.cone_vertex[leaf] = v;
          break;
        }
    }
    removed[leaf] = true;
    edge_removed[edge] = true;
    out.prune_order.push_back(leaf);
  }
  for (int u = 0; u < n; ++u)
    if (!removed[u]) {
      const auto& p = d.polyhedra[u];
      out.cone_vertex[u] = p.truncated() ? p.hyperideal_vertex() : 0;
      out.prune_order.push_back(u);
    }
  return out;
}

std::vector<std::vector<int>> face_apexes(const Decomposition& d, const ConeAssignment& a) {
  std::vector<std::vector<int>> apex(d.polyhedra.size());
  for (const auto& p : d.polyhedra) {
    apex[p.id].assign(p.faces.size(), -1);
    for (int f = 0; f < static_cast<int>(p.faces.size()); ++f)
      if (p.face_contains(f, a.cone_vertex[p.id])) apex[p.id][f] = a.cone_vertex[p.id];
  }
  auto least = [&](PolyFace f) {
    const auto& c = d.polyhedra[f.poly].faces[f.face];
    return *std::min_element(c.begin(), c.end());
  };
  for (const auto& g : d.gluings) {
    int& x = apex[g.a.poly][g.a.face];
    int& y = apex[g.b.poly][g.b.face];
    bool fixed_a = x >= 0, fixed_b = y >= 0;
    if (fixed_a && fixed_b) continue;
    if (fixed_a) {
      y = g.image(x);
    } else if (fixed_b) {
      x = g.preimage(y);
    } else if (g.a < g.b) {
      x = least(g.a);
      y = g.image(x);
    } else {
      y = least(g.b);
      x = g.preimage(y);
    }
  }
  for (const auto& p : d.polyhedra)
    for (int f = 0; f < static_cast<int>(p.faces.size()); ++f)
      if (apex[p.id][f] < 0) apex[p.id][f] = least({p.id, f});
  return apex;
}

std::vector<Diagonal> fan_diagonals(const std::vector<int>& cycle, int apex) {
  const int k = static_cast<int>(cycle.size());
  const int i = position(cycle, apex);
  std::vector<Diagonal> out;
  for (int step = 2; step <= k - 2; ++step) {
    int w = cycle[(i + step) % k];
    out.emplace_back(std::min(apex, w), std::max(apex, w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triangle> fan_triangles(const std::vector<int>& cycle, int apex) {
  const int k = static_cast<int>(cycle.size());
  const int i = position(cycle, apex);
  std::vector<Triangle> out;
  for (int step = 1; step <= k - 2; ++step)
    out.push_back(sorted_triangle(apex, cycle[(i + step) % k], cycle[(i + step + 1) % k]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConeTet> cone_polyhedron(const Polyhedron& p, int cone_vertex,
                                     const std::vector<int>& face_apex) {
  const int k = static_cast<int>(p.vertices.size());
  if (cone_vertex < 0 || cone_vertex >= k)
    throw Error(ErrorCode::InvalidConeVertex, "cone vertex " + std::to_string(cone_vertex) + " out of range");
  if (p.truncated() && cone_vertex != p.hyperideal_vertex())
    throw Error(ErrorCode::InvalidConeVertex, "a truncated polyhedron must be coned at its hyperideal vertex");
  if (face_apex.size() != p.faces.size())
    throw Error(ErrorCode::DimensionMismatch, "face apex table has the wrong length");
  const TetKind kind = p.truncated() ? TetKind::Truncated13 : TetKind::Ideal;

  std::vector<ConeTet> out;
  for (int f = 0; f < static_cast<int>(p.faces.size()); ++f) {
    const auto& cycle = p.faces[f];
    int w = face_apex[f];
    if (p.face_contains(f, cone_vertex)) {
      if (w >= 0 && w != cone_vertex)
        throw Error(ErrorCode::ConeVertexOnBase, "face " + std::to_string(f) + " contains the cone vertex");
      continue;
    }
    if (position(cycle, w) < 0)
      throw Error(ErrorCode::ApexOnFace, "apex " + std::to_string(w) + " is not a vertex of face " + std::to_string(f));
    const int n = static_cast<int>(cycle.size());
    const int i = position(cycle, w);
    for (int step = 1; step <= n - 2; ++step)
      out.push_back({{cone_vertex, w, cycle[(i + step) % n], cycle[(i + step + 1) % n]}, kind});
  }
  return out;
}

std::vector<Pillow> detect_pillows(const Decomposition& d, const ConeAssignment& a) {
  auto apex = face_apexes(d, a);
  std::vector<Pillow> out;
  for (int gi = 0; gi < static_cast<int>(d.gluings.size()); ++gi) {
    const auto& g = d.gluings[gi];
    const auto& cycle = d.polyhedra[g.a.poly].faces[g.a.face];
    int v = apex[g.a.poly][g.a.face];
    int v_prime = g.preimage(apex[g.b.poly][g.b.face]);
    auto da = fan_diagonals(cycle, v);
    auto db = fan_diagonals(cycle, v_prime);
    if (da == db) continue;
    Pillow p;
    p.gluing = gi;
    p.a = g.a;
    p.b = g.b;
    p.cycle = cycle;
    p.v = v;
    p.v_prime = v_prime;
    p.diagonals_a = da;
    p.diagonals_b = db;
    const int n = static_cast<int>(cycle.size());
    const int i = position(cycle, v);
    std::vector<int> forward, backward;
    for (int s = 1; cycle[(i + s) % n] != v_prime; ++s) forward.push_back(cycle[(i + s) % n]);
    for (int s = 1; cycle[(i - s + n) % n] != v_prime; ++s) backward.push_back(cycle[(i - s + n) % n]);
    int next = cycle[(i + 1) % n], prev = cycle[(i - 1 + n) % n];
    if (next < prev) {
      p.path1 = forward;
      p.path2 = backward;
    } else {
      p.path1 = backward;
      p.path2 = forward;
    }
    p.informational = n > 6;
    out.push_back(std::move(p));
  }
  return out;
}

LayeredPillow layer_pillow(const Pillow& p) {
  if (p.diagonals_a != fan_diagonals(p.cycle, p.v))
    throw Error(ErrorCode::NotAFan, "side " + face_name(p.a) + " is not a fan");
  if (p.diagonals_b != fan_diagonals(p.cycle, p.v_prime))
    throw Error(ErrorCode::NotAFan, "side " + face_name(p.b) + " is not a fan");

  LayeredPillow out;
  // Current triangulation: triangle -> exposed flat face, or none while the
  // triangle still belongs to the bottom fan.
  std::map<Triangle, std::optional<FlatFace>> current;
  for (const auto& t : fan_triangles(p.cycle, p.v)) current[t] = std::nullopt;

  auto consume = [&](const Triangle& t, FlatFace f) {
    auto it = current.find(t);
    if (it == current.end()) throw Error(ErrorCode::NotAFan, "layering lost a triangle");
    if (it->second) {
      FlatFace g = *it->second;
      const auto& lower = out.tets[g.tet];
      const auto& upper = out.tets[f.tet];
      Perm4 perm{};
      perm[g.face] = f.face;
      for (int l = 0; l < 4; ++l)
        if (l != g.face)
          perm[l] = static_cast<int>(std::find(upper.begin(), upper.end(), lower[l]) - upper.begin());
      out.internal.push_back({{g.tet, g.face}, {f.tet, f.face}, perm});
    } else {
      out.bottom_faces.emplace_back(t, f);
    }
    current.erase(it);
  };

  // Labels 0=v, 1=x, 2=y, 3=v'. Bottom faces 3 (v,x,y) and 1 (v,y,v');
  // top faces 2 (v,x,v') and 0 (x,y,v').
  for (const auto* path : {&p.path1, &p.path2}) {
    for (int k = static_cast<int>(path->size()) - 2; k >= 0; --k) {
      int x = (*path)[k], y = (*path)[k + 1];
      int id = static_cast<int>(out.tets.size());
      out.tets.push_back({p.v, x, y, p.v_prime});
      consume(sorted_triangle(p.v, x, y), {id, 3});
      consume(sorted_triangle(p.v, y, p.v_prime), {id, 1});
      current[sorted_triangle(p.v, x, p.v_prime)] = FlatFace{id, 2};
      current[sorted_triangle(x, y, p.v_prime)] = FlatFace{id, 0};
    }
  }
  out.bottom = fan_triangles(p.cycle, p.v);
  for (const auto& [t, f] : current) {
    out.top.push_back(t);
    if (f) out.top_faces.emplace_back(t, *f);
  }
  return out;
}

namespace {

// A tetrahedron face awaiting a partner, with the vertex ids (in some
// polyhedron's labels) carried by each tet label.
struct Slot {
  int tet = 0;
  int face = 0;
  std::array<int, 4> ids{};
};

FaceGluing glue_slots(const Slot& s, const Slot& t) {
  Perm4 perm{};
  perm[s.face] = t.face;
  for (int l = 0; l < 4; ++l) {
    if (l == s.face) continue;
    int target = -1;
    for (int m = 0; m < 4; ++m)
      if (m != t.face && t.ids[m] == s.ids[l]) target = m;
    if (target < 0) throw Error(ErrorCode::InvalidDecomposition, "face triangles do not match across a gluing");
    perm[l] = target;
  }
  return {{s.tet, s.face}, {t.tet, t.face}, perm};
}

Triangle slot_triangle(const Slot& s) {
  std::vector<int> v;
  for (int l = 0; l < 4; ++l)
    if (l != s.face) v.push_back(s.ids[l]);
  return sorted_triangle(v[0], v[1], v[2]);
}

}  // namespace

Subdivision subdivide(const Decomposition& d) {
  validate_decomposition(d);
  SubdivisionReport report;
  report.assignment = maximal_tree_cone_assignment(d);
  report.face_apex = face_apexes(d, report.assignment);

  std::vector<Tetrahedron> tets;
  std::vector<FaceGluing> gluings;
  // Open triangles of each polyhedron face, keyed by sorted vertex triple.
  std::map<PolyFace, std::map<Triangle, Slot>> face_slots;

  for (const auto& p : d.polyhedra) {
    int c = report.assignment.cone_vertex[p.id];
    auto cone = cone_polyhedron(p, c, report.face_apex[p.id]);
    const int base = static_cast<int>(tets.size());
    for (const auto& ct : cone) {
      Tetrahedron t;
      t.id = static_cast<int>(tets.size());
      t.kind = ct.kind;
      t.hyperideal_vertex = ct.kind == TetKind::Truncated13 ? 0 : -1;
      tets.push_back(t);
    }
    std::map<Triangle, std::vector<Slot>> by_triangle;
    for (int i = 0; i < static_cast<int>(cone.size()); ++i)
      for (int f = 0; f < 4; ++f) {
        Slot s{base + i, f, cone[i].vertices};
        by_triangle[slot_triangle(s)].push_back(s);
      }
    for (const auto& [tri, slots] : by_triangle) {
      if (slots.size() == 2) {
        gluings.push_back(glue_slots(slots[0], slots[1]));
        continue;
      }
      if (slots.size() > 2) invalid("polyhedron " + std::to_string(p.id) + " cones to overlapping tetrahedra");
      int owner = -1;
      for (int f = 0; f < static_cast<int>(p.faces.size()) && owner < 0; ++f)
        if (p.face_contains(f, tri[0]) && p.face_contains(f, tri[1]) && p.face_contains(f, tri[2])) owner = f;
      if (owner < 0) invalid("polyhedron " + std::to_string(p.id) + " cones to a triangle off its faces");
      face_slots[{p.id, owner}][tri] = slots[0];
    }
  }
  report.cone_tets = static_cast<int>(tets.size());

  auto pillows = detect_pillows(d, report.assignment);
  std::map<int, const Pillow*> pillow_of;
  for (const auto& p : pillows) pillow_of[p.gluing] = &p;

  for (int gi = 0; gi < static_cast<int>(d.gluings.size()); ++gi) {
    const auto& g = d.gluings[gi];
    std::map<Triangle, Slot> side_a = face_slots[g.a];
    std::map<Triangle, Slot> side_b;
    for (auto [tri, s] : face_slots[g.b]) {
      for (int l = 0; l < 4; ++l) s.ids[l] = l == s.face ? -1 : g.preimage(s.ids[l]);
      side_b[slot_triangle(s)] = s;
    }
    auto it = pillow_of.find(gi);
    if (it != pillow_of.end()) {
      const Pillow& pil = *it->second;
      for (int v : pil.cycle)
        if (d.polyhedra[g.a.poly].vertices[v] != VertexKind::Ideal)
          invalid("pillow on face " + face_name(g.a) + " has a hyperideal vertex");
      LayeredPillow stack = layer_pillow(pil);
      const int base = static_cast<int>(tets.size());
      auto flat_slot = [&](FlatFace f) { return Slot{base + f.tet, f.face, stack.tets[f.tet]}; };
      for (std::size_t i = 0; i < stack.tets.size(); ++i) {
        Tetrahedron t;
        t.id = static_cast<int>(tets.size());
        t.kind = TetKind::FlatIdeal;
        tets.push_back(t);
      }
      for (auto gl : stack.internal) {
        gl.a.tet += base;
        gl.b.tet += base;
        gluings.push_back(gl);
      }
      for (const auto& [tri, f] : stack.bottom_faces) {
        gluings.push_back(glue_slots(side_a.at(tri), flat_slot(f)));
        side_a.erase(tri);
      }
      for (const auto& [tri, f] : stack.top_faces) side_a[tri] = flat_slot(f);
      report.flat_tets_per_pillow.push_back(static_cast<int>(stack.tets.size()));
      report.flat_tets += static_cast<int>(stack.tets.size());
      if (std::binary_search(report.assignment.tree_gluings.begin(), report.assignment.tree_gluings.end(), gi))
        report.tree_pillows.push_back(gi);
    }
    if (side_a.size() != side_b.size())
      invalid("gluing " + face_name(g.a) + " " + face_name(g.b) + " joins faces triangulated differently");
    for (const auto& [tri, s] : side_a) {
      auto other = side_b.find(tri);
      if (other == side_b.end())
        invalid("gluing " + face_name(g.a) + " " + face_name(g.b) + " joins faces triangulated differently");
      gluings.push_back(glue_slots(s, other->second));
    }
  }
  report.pillows = std::move(pillows);

  Subdivision out{build_triangulation(std::move(tets), std::move(gluings)), std::move(report)};
  return out;
}

}  // namespace anglekit
