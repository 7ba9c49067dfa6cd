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

#include <vector>

#include "anglekit/dec_format.hpp"
#include "anglekit/error.hpp"
#include "anglekit/homology.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace anglekit;
using namespace anglekit::test;
using anglekit::test::load_fixture;

namespace {

std::vector<Triangulation> closed_fixtures() {
  std::vector<Triangulation> out;
  for (const auto& name : anglekit::test::closed_tri_fixtures()) out.push_back(load_fixture(name));
  out.push_back(subdivide(load_dec(anglekit::test::fixture("sample_mixed.dec"))).triangulation);
  return out;
}

Gf2Vector bits(std::size_t n, std::initializer_list<std::size_t> set) {
  Gf2Vector v(n);
  for (auto i : set) v.set(i);
  return v;
}

}  // namespace

TEST_CASE("cell counts") {
  auto t = load_fixture("figure8.tri");
  auto c = compact_complex(t);
  CHECK(c.cells[3] == 2);
  CHECK(c.cells[2] == 4 + 8);       // hexagons pair up, truncation triangles do not
  CHECK(c.cells[1] == 2 + 12);      // two edge classes, 24 truncation edges paired
  CHECK(c.cells[0] == 2 * 2);       // each edge class has two ends
  CHECK(c.edge_labels.size() == c.cells[1]);
  CHECK_THROWS_AS(compact_complex(load_fixture("open_face.tri")), Error);
}

TEST_CASE("chain complex laws") {
  for (const auto& t : closed_fixtures()) {
    auto c = compact_complex(t);
    CHECK(c.squares_to_zero());
    CHECK(c.boundary_closed());
    for (int k = 2; k <= 3; ++k)
      for (const auto& col : c.boundary[k].columns) CHECK_FALSE(c.boundary[k - 1].multiply(col).any());
    for (int k = 1; k <= 3; ++k) {
      auto ker = gf2_kernel(c.boundary[k]);
      CHECK(ker.size() + gf2_rank(c.boundary[k]) == c.cells[k]);
    }
  }
}

TEST_CASE("boundary Euler characteristics") {
  CHECK(compact_complex(load_fixture("figure8.tri")).euler_characteristic(true) == 0);
  CHECK(compact_complex(load_fixture("gieseking.tri")).euler_characteristic(true) == 0);
  for (const auto& t : closed_fixtures()) {
    auto c = compact_complex(t);
    CHECK(2 * c.euler_characteristic(false) == c.euler_characteristic(true));
    long links = 0;
    for (int v = 0; v < static_cast<int>(t.vertex_classes().size()); ++v)
      links += link_surface(t, v).euler_characteristic();
    CHECK(c.euler_characteristic(true) == links);
  }
}

TEST_CASE("ranks agree with dense elimination") {
  for (const auto& t : closed_fixtures()) {
    auto c = compact_complex(t);
    CHECK(h1_rank(c, HomologyMode::Absolute).rank == static_cast<std::size_t>(oracle_h1(c, 0)));
    CHECK(h1_rank(c, HomologyMode::Relative).rank == static_cast<std::size_t>(oracle_h1(c, 1)));
    CHECK(h1_rank(c, HomologyMode::Boundary).rank == static_cast<std::size_t>(oracle_h1(c, 2)));
  }
  auto f8 = compact_complex(load_fixture("figure8.tri"));
  CHECK(h1_rank(f8, HomologyMode::Absolute).rank == 1);
  CHECK(h1_rank(f8, HomologyMode::Boundary).rank == 2);
}

TEST_CASE("generators are cycles and independent") {
  for (const auto& t : closed_fixtures()) {
    auto c = compact_complex(t);
    auto h = h1_rank(c, HomologyMode::Absolute);
    REQUIRE(h.generators.size() == h.rank);
    Gf2Span span(c.cells[1]);
    for (const auto& col : c.boundary[2].columns) span.insert(col);
    for (const auto& g : h.generators) {
      CHECK_FALSE(c.boundary[1].multiply(g).any());
      CHECK(span.insert(g));  // not a boundary, not dependent on earlier ones
    }
    auto hb = h1_rank(c, HomologyMode::Boundary);
    for (const auto& g : hb.generators)
      for (auto e = g.find_first(); e != Gf2Vector::npos; e = g.find_next(e)) CHECK(c.on_boundary[1][e]);
  }
}

TEST_CASE("half lives, half dies") {
  for (const auto& t : closed_fixtures()) {
    auto c = compact_complex(t);
    auto boundary = h1_rank(c, HomologyMode::Boundary).rank;
    CHECK(2 * boundary_image_rank(c) == boundary);
    CHECK(boundary_image_rank(c) == static_cast<std::size_t>(oracle_image_rank(c)));
  }
}

TEST_CASE("figure-eight zero map") {
  auto c = compact_complex(load_fixture("figure8.tri"));
  auto z = zero_map_check(c);
  CHECK(z.is_zero);
  CHECK_FALSE(z.witness);
  CHECK(z.absolute_generators.size() == 1);
  for (const auto& row : z.matrix) CHECK_FALSE(row.any());
}

TEST_CASE("zero map does not depend on elimination order") {
  for (const auto& t : closed_fixtures()) {
    auto c = compact_complex(t);
    const bool base = zero_map_check(c).is_zero;
    const auto rank = h1_rank(c, HomologyMode::Absolute).rank;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      CHECK(zero_map_check(c, seed).is_zero == base);
      CHECK(h1_rank(c, HomologyMode::Absolute, seed).rank == rank);
      CHECK(h1_rank(c, HomologyMode::Relative, seed).rank == h1_rank(c, HomologyMode::Relative).rank);
    }
  }
}

TEST_CASE("hand-built loop has a surviving relative class") {
  // One interior vertex and one loop edge: H1 = H1(M, boundary) = Z/2.
  CellComplex c;
  c.cells = {1, 1, 0, 0};
  c.boundary[1].rows = 1;
  c.boundary[1].columns = {Gf2Vector(1)};
  c.boundary[2].rows = 1;
  c.boundary[3].rows = 0;
  c.on_boundary = {std::vector<bool>{false}, std::vector<bool>{false}, {}, {}};
  c.edge_labels = {"loop"};
  REQUIRE(c.squares_to_zero());
  CHECK(h1_rank(c, HomologyMode::Absolute).rank == 1);
  CHECK(h1_rank(c, HomologyMode::Relative).rank == 1);
  auto z = zero_map_check(c);
  CHECK_FALSE(z.is_zero);
  REQUIRE(z.witness);
  CHECK(*z.witness == 0);
}

TEST_CASE("hand-built cylinder has a vanishing relative class") {
  // Vertices a (bottom), b (top); edges: bottom loop, top loop, vertical;
  // one square face whose boundary is bottom + top (vertical twice).
  CellComplex c;
  c.cells = {2, 3, 1, 0};
  c.boundary[1].rows = 2;
  c.boundary[1].columns = {bits(2, {}), bits(2, {}), bits(2, {0, 1})};
  c.boundary[2].rows = 3;
  c.boundary[2].columns = {bits(3, {0, 1})};
  c.boundary[3].rows = 1;
  c.on_boundary = {std::vector<bool>{true, true}, std::vector<bool>{true, true, false}, std::vector<bool>{false}, {}};
  c.edge_labels = {"bottom", "top", "vertical"};
  REQUIRE(c.squares_to_zero());
  REQUIRE(c.boundary_closed());
  CHECK(h1_rank(c, HomologyMode::Absolute).rank == 1);
  CHECK(h1_rank(c, HomologyMode::Boundary).rank == 2);
  CHECK(boundary_image_rank(c) == 1);
  CHECK(zero_map_check(c).is_zero);
}

TEST_CASE("a solid tetrahedron is contractible") {
  // Simplicial 3-ball; the whole 2-sphere is boundary.
  CellComplex c;
  c.cells = {4, 6, 4, 1};
  c.boundary[1].rows = 4;
  c.boundary[1].columns = {bits(4, {0, 1}), bits(4, {0, 2}), bits(4, {0, 3}),
                           bits(4, {1, 2}), bits(4, {1, 3}), bits(4, {2, 3})};
  c.boundary[2].rows = 6;
  c.boundary[2].columns = {bits(6, {3, 4, 5}), bits(6, {1, 2, 5}), bits(6, {0, 2, 4}), bits(6, {0, 1, 3})};
  c.boundary[3].rows = 4;
  c.boundary[3].columns = {bits(4, {0, 1, 2, 3})};
  c.on_boundary = {std::vector<bool>(4, true), std::vector<bool>(6, true), std::vector<bool>(4, true),
                   std::vector<bool>{false}};
  c.edge_labels = {"01", "02", "03", "12", "13", "23"};
  REQUIRE(c.squares_to_zero());
  REQUIRE(c.boundary_closed());
  CHECK(c.euler_characteristic(false) == 1);
  CHECK(c.euler_characteristic(true) == 2);
  for (auto mode : {HomologyMode::Absolute, HomologyMode::Relative, HomologyMode::Boundary})
    CHECK(h1_rank(c, mode).rank == 0);
  CHECK(zero_map_check(c).is_zero);
}

TEST_CASE("GF(2) helpers") {
  Gf2Matrix m;
  m.rows = 3;
  m.columns = {bits(3, {0, 1}), bits(3, {1, 2}), bits(3, {0, 2})};
  CHECK(gf2_rank(m) == 2);
  auto k = gf2_kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == bits(3, {0, 1, 2}));
  Gf2Span s(3, 2);
  CHECK(s.insert(bits(3, {0, 1}), 0));
  CHECK(s.insert(bits(3, {1, 2}), 1));
  CHECK_FALSE(s.insert(bits(3, {0, 2})));
  Gf2Vector v = bits(3, {0, 2});
  auto combo = s.reduce(v);
  CHECK_FALSE(v.any());
  CHECK(combo == bits(2, {0, 1}));
  CHECK(s.contains(bits(3, {0, 2})));
  CHECK_FALSE(s.contains(bits(3, {0})));
}
