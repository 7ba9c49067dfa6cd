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

#include "anglekit/linalg.hpp"
#include "support.hpp"

using namespace anglekit;

namespace {

RationalMatrix from_rows(std::vector<RationalVector> rows) {
  RationalMatrix m;
  for (auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace

TEST_CASE("rational strings are always p/q") {
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(0)) == "0/1");
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("primitive integer scaling") {
  CHECK(primitive_integer({Rational(1, 2), Rational(-1, 3)}) == RationalVector{3, -2});
  CHECK(primitive_integer({0, 4, 6}) == RationalVector{0, 2, 3});
  CHECK(primitive_integer({0, 0}) == RationalVector{0, 0});
}

TEST_CASE("rref rank agrees with fraction-free elimination") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + trial % 6, cols = 1 + (trial / 6) % 7;
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = (rng() % 3 == 0) ? Rational(0) : test::random_rational(rng, 3, 4);
    if (trial % 5 == 0 && rows > 1)
      for (int c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 2 - m(rows - 2, c);
    CHECK(rank(m) == test::bareiss_rank(m));
  }
}

TEST_CASE("null space vectors are annihilated and independent") {
  auto m = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}});
  auto basis = null_space(m);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK(is_zero_vector(m.multiply(v)));
  RationalMatrix b;
  for (auto& v : basis) b.append_row(v);
  CHECK(test::bareiss_rank(b) == 2);
}

TEST_CASE("transpose product matches the explicit transpose") {
  auto m = from_rows({{1, 0, Rational(1, 2)}, {-1, 3, 0}});
  RationalVector y{2, Rational(1, 3)};
  CHECK(m.multiply_transpose(y) == RationalVector{Rational(5, 3), 1, 1});
  CHECK_THROWS(m.multiply(RationalVector{1}));
}
