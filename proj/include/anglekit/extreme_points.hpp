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

#include <vector>

#include "anglekit/linalg.hpp"

namespace anglekit {

/// The polyhedron {x : Q x = 0, x_i >= 0 (i in nonnegative),
/// x_i = 0 (i in zero), sum_{i in normalization} x_i = 1}.
struct ConeConstraints {
  std::vector<int> nonnegative;
  std::vector<int> zero;
  std::vector<int> normalization;
};

struct ExtremePoints {
  std::vector<RationalVector> vertices;  // sorted, distinct
  std::vector<RationalVector> rays;      // extreme recession rays, primitive integer, sorted
};

/// Double description over a parametrisation of the equality kernel.
/// Throws SizeCap when Q has more than column_cap columns and NotPointed
/// when the polyhedron contains a line.
ExtremePoints cone_extreme_points(const RationalMatrix& q, const ConeConstraints& constraints,
                                  int column_cap = 7 * 20);

}  // namespace anglekit
