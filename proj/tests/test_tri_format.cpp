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
#include <random>

#include "anglekit/dec_format.hpp"
#include "anglekit/error.hpp"
#include "anglekit/tri_format.hpp"
#include "support.hpp"

using namespace anglekit;
using anglekit::test::fixture;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_tri(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(ErrorCode::SyntaxError, 0, 0, "");
}

ParseError dec_error(std::string_view text) {
  try {
    parse_dec(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(ErrorCode::SyntaxError, 0, 0, "");
}

}  // namespace

TEST_CASE("fixtures round-trip") {
  for (const auto& name : {"figure8.tri", "gieseking.tri", "valence1.tri", "open_face.tri", "single.tri",
                           "truncated_single.tri"}) {
    auto t = load_tri(fixture(name));
    std::string once = serialize_tri(t);
    auto again = build_triangulation(parse_tri(once).tets, parse_tri(once).gluings);
    CHECK(serialize_tri(again) == once);
    REQUIRE(again.gluings().size() == t.gluings().size());
    for (std::size_t i = 0; i < t.gluings().size(); ++i) {
      CHECK(again.gluings()[i].a == t.gluings()[i].a);
      CHECK(again.gluings()[i].b == t.gluings()[i].b);
      CHECK(again.gluings()[i].perm == t.gluings()[i].perm);
    }
  }
}

TEST_CASE("perm lists images of ascending face vertices") {
  auto d = parse_tri("tri v1\ntet 0 kind=ideal hyper=-\ntet 1 kind=ideal hyper=-\nglue 0.0 1.1 perm=302\n");
  REQUIRE(d.gluings.size() == 1);
  const auto& g = d.gluings[0];
  CHECK(g.perm[1] == 3);
  CHECK(g.perm[2] == 0);
  CHECK(g.perm[3] == 2);
  CHECK(g.perm[0] == 1);
  CHECK(g.images() == std::array<int, 3>{3, 0, 2});
  auto inv = g.inverse();
  for (int v = 0; v < 4; ++v) CHECK(inv[g.perm[v]] == v);
}

TEST_CASE("comments and blank lines are ignored") {
  auto d = parse_tri("# leading\ntri v1\n\n  # indented\ntet 0 kind=trunc hyper=2\n");
  REQUIRE(d.tets.size() == 1);
  CHECK(d.tets[0].kind == TetKind::Truncated13);
  CHECK(d.tets[0].hyperideal_vertex == 2);
}

TEST_CASE("parse errors carry positions") {
  auto e = parse_error("tri v1\ntet 0 kind=ideal hyper=-\nbogus 1\n");
  CHECK(e.code() == ErrorCode::UnknownDirective);
  CHECK(e.line() == 3);
  CHECK(e.column() == 1);

  e = parse_error("tri v1\ntet 0 kind=ideal hyper=-\ntet 1 kind=ideal hyper=-\nglue 0.0 1.1 perm=311\n");
  CHECK(e.code() == ErrorCode::BadPermutation);
  CHECK(e.line() == 4);
  CHECK(e.column() == 14);

  e = parse_error("tri v1\ntet 0 kind=ideal hyper=-\ntet 1 kind=ideal hyper=-\nglue 0.0 1.1 perm=012\n");
  CHECK(e.code() == ErrorCode::BadPermutation);  // 1 is not on face 1

  e = parse_error("tri v1\ntet 0 kind=ideal hyper=-\nglue 0.0 0.1 perm=02\n");
  CHECK(e.code() == ErrorCode::BadPermutation);

  e = parse_error("tri v1\ntet 0 kind=cube hyper=-\n");
  CHECK(e.code() == ErrorCode::SyntaxError);
  CHECK(e.column() == 7);

  e = parse_error("tri v1\ntet 0 kind=ideal hyper=1\n");
  CHECK(e.code() == ErrorCode::SyntaxError);

  e = parse_error("tri v1\ntet 1 kind=ideal hyper=-\n");
  CHECK(e.code() == ErrorCode::SyntaxError);

  e = parse_error("tet 0 kind=ideal hyper=-\n");
  CHECK(e.line() == 1);

  e = parse_error("tri v1\ntet 0 kind=ideal hyper=-\nglue 0.5 0.1 perm=023\n");
  CHECK(e.code() == ErrorCode::SyntaxError);
}

TEST_CASE("random triangulations round-trip") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 4;
    TriData d;
    for (int i = 0; i < n; ++i) {
      bool trunc = rng() % 3 == 0;
      d.tets.push_back({i, trunc ? TetKind::Truncated13 : (rng() % 2 ? TetKind::Ideal : TetKind::FlatIdeal),
                        trunc ? static_cast<int>(rng() % 4) : -1});
    }
    std::vector<FaceRef> faces;
    for (int i = 0; i < n; ++i)
      for (int f = 0; f < 4; ++f) faces.push_back({i, f});
    std::shuffle(faces.begin(), faces.end(), rng);
    for (std::size_t i = 0; i + 1 < faces.size(); i += 2) {
      auto images = face_vertices(faces[i + 1].face);
      std::shuffle(images.begin(), images.end(), rng);
      d.gluings.push_back(FaceGluing::from_images(faces[i], faces[i + 1], images));
    }
    std::string text = serialize_tri(d);
    auto back = parse_tri(text);
    CHECK(serialize_tri(back) == text);
    REQUIRE(back.tets.size() == d.tets.size());
    for (int i = 0; i < n; ++i) {
      CHECK(back.tets[i].kind == d.tets[i].kind);
      CHECK(back.tets[i].hyperideal_vertex == d.tets[i].hyperideal_vertex);
    }
    for (std::size_t i = 0; i < d.gluings.size(); ++i) CHECK(back.gluings[i].perm == d.gluings[i].perm);
  }
}

TEST_CASE("missing file") { CHECK_THROWS_AS(load_tri(fixture("no_such_file.tri")), Error); }

TEST_CASE("dec fixture round-trip") {
  auto d = load_dec(fixture("sample_mixed.dec"));
  CHECK(d.polyhedra.size() == 2);
  CHECK(d.gluings.size() == 8);
  CHECK(d.polyhedra[1].hyperideal_vertex() == 8);
  std::string once = serialize_dec(d);
  CHECK(serialize_dec(parse_dec(once)) == once);
}

TEST_CASE("dec parse errors") {
  auto e = dec_error("dec v1\nvtx 0 kind=ideal\n");
  CHECK(e.line() == 2);
  e = dec_error("dec v1\npoly 0\nvtx 0 kind=weird\n");
  CHECK(e.column() == 7);
  e = dec_error("dec v1\npoly 0\nedge 0\n");
  CHECK(e.code() == ErrorCode::UnknownDirective);
  e = dec_error("dec v1\npoly 0\nvtx 0 kind=ideal\nglue 0.0 0.1 map=0-1\n");
  CHECK(e.line() == 4);
}
