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
#pragma once

// Shared helpers and independent oracles for the test binaries. Nothing in
// here calls the library routine it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "anglekit/linalg.hpp"
#include "anglekit/rational.hpp"
#include "anglekit/tri_format.hpp"

namespace anglekit::test {

inline std::string fixture(const std::string& name) { return std::string(ANGLEKIT_FIXTURE_DIR) + "/" + name; }

inline Triangulation load_fixture(const std::string& name) { return load_tri(fixture(name)); }

inline const std::vector<std::string>& closed_tri_fixtures() {
  static const std::vector<std::string> names = {"figure8.tri", "gieseking.tri", "valence1.tri"};
  return names;
}

/// Fraction-free (Bareiss) elimination rank after clearing denominators
/// row by row; integer arithmetic only.
inline int bareiss_rank(const RationalMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (int r = 0; r < rows; ++r) {
    Integer l = 1;
    for (int c = 0; c < cols; ++c) l = boost::multiprecision::lcm(l, Integer(denominator(m(r, c))));
    for (int c = 0; c < cols; ++c) a[r][c] = Integer(numerator(m(r, c)) * (l / denominator(m(r, c))));
  }
  Integer prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int k = c + 1; k < cols; ++k) a[i][k] = (a[rank][c] * a[i][k] - a[i][c] * a[rank][k]) / prev;
      a[i][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Small random rational in [-bound, bound] with denominator at most den.
inline Rational random_rational(std::mt19937_64& rng, int bound, int den) {
  std::uniform_int_distribution<int> n(-bound * den, bound * den), d(1, den);
  return Rational(n(rng), d(rng));
}

}  // namespace anglekit::test
