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
#include <set>

#include "anglekit/error.hpp"
#include "anglekit/extreme_points.hpp"
#include "anglekit/normal.hpp"
#include "anglekit/simplex.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace anglekit;
using namespace anglekit::test;

namespace {

// Extreme rays of the recession cone: supports whose restricted kernel is a
// single strictly signed line.
std::set<RationalVector> brute_force_rays(const RationalMatrix& q, const std::vector<int>& norm) {
  RationalMatrix m = q;
  RationalVector row(q.cols());
  for (int j : norm) row[j] = 1;
  m.append_row(row);
  std::set<RationalVector> out;
  for (unsigned mask = 1; mask < (1u << q.cols()); ++mask) {
    std::vector<int> cols;
    for (int j = 0; j < q.cols(); ++j)
      if (mask >> j & 1) cols.push_back(j);
    RationalMatrix sub(m.rows(), static_cast<int>(cols.size()));
    for (int r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) sub(r, static_cast<int>(c)) = m(r, cols[c]);
    auto k = null_space(sub);
    if (k.size() != 1) continue;
    RationalVector x(q.cols());
    for (std::size_t c = 0; c < cols.size(); ++c) x[cols[c]] = k[0][c];
    if (x[cols[0]] < 0)
      for (auto& v : x) v = -v;
    bool positive = true;
    for (int j : cols) positive = positive && x[j] > 0;
    if (positive) out.insert(primitive_integer(x));
  }
  return out;
}

bool convex_combination_of_others(const std::vector<RationalVector>& vs, std::size_t i) {
  LinearProgram lp;
  const int d = static_cast<int>(vs[i].size());
  const int k = static_cast<int>(vs.size()) - 1;
  lp.A = RationalMatrix(d + 1, k);
  int col = 0;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (j == i) continue;
    for (int r = 0; r < d; ++r) lp.A(r, col) = vs[j][r];
    lp.A(d, col) = 1;
    ++col;
  }
  lp.b = vs[i];
  lp.b.push_back(1);
  lp.c.assign(k, Rational(0));
  return solve_lp(lp).status == LpStatus::Optimal;
}

ConeConstraints all_nonnegative(int cols, std::vector<int> norm) {
  ConeConstraints c;
  for (int i = 0; i < cols; ++i) c.nonnegative.push_back(i);
  c.normalization = std::move(norm);
  return c;
}

}  // namespace

TEST_CASE("unit simplex") {
  RationalMatrix q(0, 7);
  auto ep = cone_extreme_points(q, all_nonnegative(7, {0, 1, 2, 3, 4, 5, 6}));
  REQUIRE(ep.vertices.size() == 7);
  for (int i = 0; i < 7; ++i) {
    RationalVector e(7);
    e[i] = 1;
    CHECK(std::find(ep.vertices.begin(), ep.vertices.end(), e) != ep.vertices.end());
  }
  CHECK(ep.rays.empty());
  CHECK(std::is_sorted(ep.vertices.begin(), ep.vertices.end()));
}

TEST_CASE("contradictory constraints give an empty set") {
  auto t = anglekit::test::load_fixture("figure8.tri");
  auto c = all_nonnegative(14, {0, 1, 2, 3, 4, 5});
  c.zero = {0, 1, 2, 3, 4, 5};
  auto ep = cone_extreme_points(compatibility_matrix(t), c);
  CHECK(ep.vertices.empty());
  RationalMatrix a = compatibility_matrix(t);
  RationalVector norm(14), zero_row(14);
  for (int j = 0; j < 6; ++j) norm[j] = 1;
  LinearProgram lp;
  lp.A = a;
  lp.A.append_row(norm);
  for (int j = 0; j < 6; ++j) {
    RationalVector r(14);
    r[j] = 1;
    lp.A.append_row(r);
  }
  lp.b.assign(lp.A.rows(), Rational(0));
  lp.b[a.rows()] = 1;
  lp.c.assign(14, Rational(0));
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);
}

TEST_CASE("figure-eight vertices match support enumeration") {
  auto t = anglekit::test::load_fixture("figure8.tri");
  auto q = compatibility_matrix(t);
  std::vector<int> quads{0, 1, 2, 3, 4, 5};
  auto ep = cone_extreme_points(q, all_nonnegative(14, quads));
  auto oracle = brute_force_vertices(q, quads);
  CHECK(std::set<RationalVector>(ep.vertices.begin(), ep.vertices.end()) == oracle);
  CHECK(ep.vertices.size() == oracle.size());
  CHECK(std::set<RationalVector>(ep.rays.begin(), ep.rays.end()) == brute_force_rays(q, quads));
  for (const auto& v : ep.vertices) {
    CHECK(is_zero_vector(q.multiply(v)));
    Rational s = 0;
    for (int j : quads) s += v[j];
    CHECK(s == 1);
    for (const auto& x : v) CHECK(x >= 0);
  }
  for (std::size_t i = 0; i < ep.vertices.size(); ++i)
    CHECK_FALSE(convex_combination_of_others(ep.vertices, i));
}

TEST_CASE("random cones match support enumeration") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const int rows = 1 + trial % 3, cols = 4 + trial % 4;
    RationalMatrix q(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) q(r, c) = Rational(static_cast<int>(rng() % 5) - 2);
    std::vector<int> norm;
    for (int c = 0; c < cols; ++c)
      if (rng() % 2) norm.push_back(c);
    if (norm.empty()) norm.push_back(0);
    auto ep = cone_extreme_points(q, all_nonnegative(cols, norm));
    CHECK(std::set<RationalVector>(ep.vertices.begin(), ep.vertices.end()) == brute_force_vertices(q, norm));
    CHECK(std::set<RationalVector>(ep.rays.begin(), ep.rays.end()) == brute_force_rays(q, norm));
    CHECK(std::set<RationalVector>(ep.vertices.begin(), ep.vertices.end()).size() == ep.vertices.size());
  }
}

TEST_CASE("column cap") {
  RationalMatrix q(0, 10);
  try {
    cone_extreme_points(q, all_nonnegative(10, {0}), 9);
    FAIL("expected SizeCap");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeCap);
  }
}

TEST_CASE("cone without enough sign constraints is rejected") {
  RationalMatrix q(0, 3);
  ConeConstraints c;
  c.nonnegative = {0};
  c.normalization = {0};
  CHECK_THROWS_AS(cone_extreme_points(q, c), Error);
}
