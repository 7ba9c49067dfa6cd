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
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "anglekit/angles.hpp"
#include "anglekit/dec_format.hpp"
#include "anglekit/error.hpp"
#include "anglekit/subdivision.hpp"
#include "support.hpp"

using namespace anglekit;
using anglekit::test::fixture;

namespace {

Polyhedron octahedron(int id) {
  // 0 top, 5 bottom, 1..4 equator.
  return {id, std::vector<VertexKind>(6, VertexKind::Ideal),
          {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}}};
}

Polyhedron pyramid(int id, int base) {
  Polyhedron p{id, std::vector<VertexKind>(base + 1, VertexKind::Ideal), {}};
  p.vertices[base] = VertexKind::Hyperideal;
  std::vector<int> b;
  for (int i = 0; i < base; ++i) b.push_back(i);
  p.faces.push_back(b);
  for (int i = 0; i < base; ++i) p.faces.push_back({i, (i + 1) % base, base});
  return p;
}

std::vector<int> least_index_apexes(const Polyhedron& p, int cone) {
  std::vector<int> out;
  for (const auto& f : p.faces)
    out.push_back(std::find(f.begin(), f.end(), cone) != f.end() ? -1 : *std::min_element(f.begin(), f.end()));
  return out;
}

// V - E + F - T of the simplicial complex spanned by the tets.
int euler_of_tets(const std::vector<ConeTet>& tets) {
  std::set<int> v;
  std::set<std::pair<int, int>> e;
  std::set<Triangle> f;
  for (const auto& t : tets) {
    auto x = t.vertices;
    std::sort(x.begin(), x.end());
    for (int i = 0; i < 4; ++i) {
      v.insert(x[i]);
      for (int j = i + 1; j < 4; ++j) {
        e.insert({x[i], x[j]});
        for (int k = j + 1; k < 4; ++k) f.insert({x[i], x[j], x[k]});
      }
    }
  }
  return static_cast<int>(v.size() - e.size() + f.size() - tets.size());
}

std::set<Diagonal> fan_oracle(const std::vector<int>& cycle, int apex) {
  const int n = static_cast<int>(cycle.size());
  std::set<Diagonal> out;
  for (int i = 0; i < n; ++i) {
    int prev = cycle[(i + n - 1) % n], next = cycle[(i + 1) % n];
    if (cycle[i] != apex && prev != apex && next != apex)
      out.insert({std::min(apex, cycle[i]), std::max(apex, cycle[i])});
  }
  return out;
}

std::set<Diagonal> diagonals_of(const std::vector<Triangle>& tris, const std::vector<int>& cycle) {
  std::set<Diagonal> sides;
  const int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i) sides.insert({std::min(cycle[i], cycle[(i + 1) % n]), std::max(cycle[i], cycle[(i + 1) % n])});
  std::set<Diagonal> out;
  for (const auto& t : tris)
    for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}})
      if (!sides.count({a, b})) out.insert({a, b});
  return out;
}

Pillow make_pillow(const std::vector<int>& cycle, int v, int vp) {
  Pillow p;
  p.cycle = cycle;
  p.v = v;
  p.v_prime = vp;
  p.diagonals_a = fan_diagonals(cycle, v);
  p.diagonals_b = fan_diagonals(cycle, vp);
  const int n = static_cast<int>(cycle.size());
  int i = static_cast<int>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
  for (int s = 1; cycle[(i + s) % n] != vp; ++s) p.path1.push_back(cycle[(i + s) % n]);
  for (int s = 1; cycle[(i - s + n) % n] != vp; ++s) p.path2.push_back(cycle[(i - s + n) % n]);
  return p;
}

int expected_flat(const Pillow& p) {
  return std::max(0, static_cast<int>(p.path1.size()) - 1) + std::max(0, static_cast<int>(p.path2.size()) - 1);
}

// Replays the stack as diagonal flips vy -> xv' and checks it ends on the
// target fan.
void check_layering(const Pillow& p, const LayeredPillow& l) {
  std::set<Diagonal> d = fan_oracle(p.cycle, p.v);
  auto key = [](int a, int b) { return Diagonal{std::min(a, b), std::max(a, b)}; };
  for (const auto& t : l.tets) {
    auto [v, x, y, vp] = t;
    CHECK(v == p.v);
    CHECK(vp == p.v_prime);
    REQUIRE(d.count(key(v, y)));
    CHECK_FALSE(d.count(key(x, vp)));
    d.erase(key(v, y));
    d.insert(key(x, vp));
  }
  CHECK(d == fan_oracle(p.cycle, p.v_prime));
  CHECK(diagonals_of(l.bottom, p.cycle) == fan_oracle(p.cycle, p.v));
  CHECK(diagonals_of(l.top, p.cycle) == fan_oracle(p.cycle, p.v_prime));
  // Each flat face is used exactly once: internally, on the bottom or on top.
  std::map<std::pair<int, int>, int> uses;
  for (const auto& g : l.internal) {
    ++uses[{g.a.tet, g.a.face}];
    ++uses[{g.b.tet, g.b.face}];
  }
  for (const auto& [t, f] : l.bottom_faces) ++uses[{f.tet, f.face}];
  for (const auto& [t, f] : l.top_faces) ++uses[{f.tet, f.face}];
  CHECK(uses.size() == 4 * l.tets.size());
  for (const auto& [k, n] : uses) CHECK(n == 1);
}

Decomposition figure8_as_decomposition() {
  auto t = anglekit::test::load_fixture("figure8.tri");
  Decomposition d;
  for (int i = 0; i < t.size(); ++i) {
    Polyhedron p{i, std::vector<VertexKind>(4, VertexKind::Ideal), {}};
    for (int f = 0; f < 4; ++f) {
      auto fv = face_vertices(f);
      p.faces.push_back({fv.begin(), fv.end()});
    }
    d.polyhedra.push_back(p);
  }
  for (const auto& g : t.gluings()) {
    PolyGluing pg{{g.a.tet, g.a.face}, {g.b.tet, g.b.face}, {}};
    for (int v : face_vertices(g.a.face)) pg.map.push_back({v, g.perm[v]});
    d.gluings.push_back(pg);
  }
  return d;
}

}  // namespace

TEST_CASE("coning an ideal octahedron") {
  auto p = octahedron(0);
  auto tets = cone_polyhedron(p, 0, least_index_apexes(p, 0));
  int oracle = 0;
  for (const auto& f : p.faces)
    if (std::find(f.begin(), f.end(), 0) == f.end()) oracle += static_cast<int>(f.size()) - 2;
  CHECK(oracle == 4);
  CHECK(tets.size() == 4);
  CHECK(euler_of_tets(tets) == 1);
  for (const auto& t : tets) {
    CHECK(t.kind == TetKind::Ideal);
    CHECK(t.vertices[0] == 0);
    // The other three span a face avoiding the cone vertex.
    std::set<int> base(t.vertices.begin() + 1, t.vertices.end());
    bool on_face = false;
    for (const auto& f : p.faces)
      if (std::set<int>(f.begin(), f.end()) == base) on_face = true;
    CHECK(on_face);
  }
}

TEST_CASE("coning a truncated 1-5 pyramid") {
  auto p = pyramid(0, 5);
  auto tets = cone_polyhedron(p, 5, least_index_apexes(p, 5));
  REQUIRE(tets.size() == 3);
  for (const auto& t : tets) {
    CHECK(t.kind == TetKind::Truncated13);
    CHECK(t.vertices[0] == 5);
    CHECK(t.vertices[1] == 0);
  }
  CHECK(euler_of_tets(tets) == 1);
}

TEST_CASE("coning errors") {
  auto p = pyramid(0, 4);
  auto apex = least_index_apexes(p, 4);
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::SyntaxError;
  };
  CHECK(code([&] { cone_polyhedron(p, 0, apex); }) == ErrorCode::InvalidConeVertex);
  CHECK(code([&] { cone_polyhedron(p, 9, apex); }) == ErrorCode::InvalidConeVertex);
  auto bad = apex;
  bad[0] = 4;
  CHECK(code([&] { cone_polyhedron(p, 4, bad); }) == ErrorCode::ApexOnFace);
  bad = apex;
  bad[1] = 0;
  CHECK(code([&] { cone_polyhedron(p, 4, bad); }) == ErrorCode::ConeVertexOnBase);
  CHECK(code([&] { cone_polyhedron(p, 4, {0}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("fans") {
  std::vector<int> square{0, 1, 2, 3};
  CHECK(fan_diagonals(square, 0) == std::vector<Diagonal>{{0, 2}});
  CHECK(fan_diagonals(square, 1) == std::vector<Diagonal>{{1, 3}});
  CHECK(fan_diagonals(square, 2) == fan_diagonals(square, 0));
  for (int n = 3; n <= 8; ++n) {
    std::vector<int> c;
    for (int i = 0; i < n; ++i) c.push_back(10 * i + 3);
    for (int v : c) {
      auto d = fan_diagonals(c, v);
      CHECK(std::set<Diagonal>(d.begin(), d.end()) == fan_oracle(c, v));
      CHECK(fan_triangles(c, v).size() == static_cast<std::size_t>(n - 2));
    }
  }
}

TEST_CASE("quadrilateral pillow layering") {
  auto p = make_pillow({0, 1, 2, 3}, 0, 1);
  CHECK(p.path1.empty());
  CHECK(p.path2 == std::vector<int>{3, 2});
  auto l = layer_pillow(p);
  REQUIRE(l.tets.size() == 1);
  CHECK(l.tets[0] == std::array<int, 4>{0, 3, 2, 1});
  check_layering(p, l);
}

TEST_CASE("hexagon pillow layering") {
  auto p = make_pillow({0, 1, 2, 3, 4, 5}, 0, 3);
  CHECK(p.path1.size() == 2);
  CHECK(p.path2.size() == 2);
  auto l = layer_pillow(p);
  CHECK(l.tets.size() == 2);
  check_layering(p, l);
}

TEST_CASE("random polygon layering") {
  std::mt19937_64 rng(31);
  int layered = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 5;
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = 3 * i + static_cast<int>(rng() % 3);
    std::shuffle(c.begin(), c.end(), rng);
    int v = c[rng() % n], vp = c[rng() % n];
    if (v == vp || fan_oracle(c, v) == fan_oracle(c, vp)) continue;
    auto p = make_pillow(c, v, vp);
    auto l = layer_pillow(p);
    CHECK(static_cast<int>(l.tets.size()) == expected_flat(p));
    check_layering(p, l);
    ++layered;
  }
  CHECK(layered > 200);
}

TEST_CASE("non-fan side is rejected") {
  auto p = make_pillow({0, 1, 2, 3, 4}, 0, 2);
  p.diagonals_b = {{1, 3}, {1, 4}};
  CHECK_THROWS_AS(layer_pillow(p), Error);
}

TEST_CASE("truncated faces match across a gluing") {
  Decomposition d;
  d.polyhedra = {pyramid(0, 4), pyramid(1, 4)};
  d.gluings.push_back({{0, 0}, {1, 0}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
  validate_decomposition(d);
  auto a = maximal_tree_cone_assignment(d);
  CHECK(a.cone_vertex == std::vector<int>{4, 4});
  CHECK(detect_pillows(d, a).empty());
}

TEST_CASE("decomposition validation") {
  Decomposition d;
  d.polyhedra = {pyramid(0, 4), octahedron(1)};
  d.gluings.push_back({{0, 1}, {1, 0}, {{0, 0}, {1, 1}, {4, 2}}});
  CHECK_THROWS_AS(validate_decomposition(d), Error);  // hyperideal onto ideal
  d.gluings = {{{1, 0}, {1, 1}, {{0, 0}, {1, 0}, {2, 2}}}};
  CHECK_THROWS_AS(validate_decomposition(d), Error);  // not a bijection
  d.gluings = {{{1, 0}, {1, 0}, {{0, 0}, {1, 1}, {2, 2}}}};
  CHECK_THROWS_AS(validate_decomposition(d), Error);  // glued twice
  Decomposition apart;
  apart.polyhedra = {octahedron(0), octahedron(1)};
  try {
    maximal_tree_cone_assignment(apart);
    FAIL("expected DisconnectedDualGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DisconnectedDualGraph);
  }
}

TEST_CASE("tetrahedral decomposition subdivides to itself") {
  auto d = figure8_as_decomposition();
  auto s = subdivide(d);
  const auto& t = s.triangulation;
  CHECK(t.size() == 2);
  CHECK(s.report.flat_tets == 0);
  CHECK(s.report.pillows.empty());
  CHECK(validate_triangulation(t).ok());
  REQUIRE(t.edge_classes().size() == 2);
  for (const auto& c : t.edge_classes()) CHECK(c.valence() == 6);
  CHECK(t.vertex_classes().size() == 1);
  CHECK(solve_angles(t, AngleMode::Strict).feasible);
}

TEST_CASE("sample_mixed subdivision") {
  auto d = load_dec(fixture("sample_mixed.dec"));
  validate_decomposition(d);
  auto s = subdivide(d);
  const auto& t = s.triangulation;
  const auto& r = s.report;
  CHECK(validate_triangulation(t).ok());
  CHECK(r.tree_pillows.empty());
  CHECK(r.assignment.tree_gluings.size() == d.polyhedra.size() - 1);
  for (int g : r.assignment.tree_gluings)
    for (const auto& p : r.pillows) CHECK(p.gluing != g);
  REQUIRE_FALSE(r.pillows.empty());

  int expected = 0;
  for (const auto& p : r.pillows) {
    expected += expected_flat(p);
    check_layering(p, layer_pillow(p));
  }
  CHECK(r.flat_tets == expected);
  CHECK(t.size() == r.cone_tets + r.flat_tets);

  int cone_oracle = 0;
  for (const auto& p : d.polyhedra) {
    int c = r.assignment.cone_vertex[p.id];
    for (const auto& f : p.faces)
      if (std::find(f.begin(), f.end(), c) == f.end()) cone_oracle += static_cast<int>(f.size()) - 2;
  }
  CHECK(r.cone_tets == cone_oracle);

  int flat = 0;
  for (const auto& tet : t.tets()) {
    if (tet.kind != TetKind::FlatIdeal) continue;
    ++flat;
    CHECK(tet.hyperideal_vertex == -1);
    for (int v = 0; v < 4; ++v) CHECK_FALSE(t.vertex_classes()[t.vertex_class_of(tet.id, v)].hyperideal);
  }
  CHECK(flat == r.flat_tets);

  for (int c = 0; c < static_cast<int>(t.vertex_classes().size()); ++c) {
    int chi = link_surface(t, c).euler_characteristic();
    if (t.vertex_classes()[c].hyperideal)
      CHECK(chi < 0);
    else
      CHECK(chi == 0);
  }
}

TEST_CASE("subdivision is deterministic") {
  auto d = load_dec(fixture("sample_mixed.dec"));
  CHECK(serialize_tri(subdivide(d).triangulation) == serialize_tri(subdivide(d).triangulation));
}
