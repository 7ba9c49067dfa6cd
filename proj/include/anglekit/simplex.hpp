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
#include "anglekit/rational.hpp"

namespace anglekit {

/// maximize c.x subject to A x = b, x >= 0.
struct LinearProgram {
  RationalMatrix A;
  RationalVector b;
  RationalVector c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector x;
  Rational objective;
  /// Optimal: dual solution, A^T y >= c and b.y == objective.
  RationalVector dual;
  /// Infeasible: Farkas ray, A^T y <= 0 and b.y > 0.
  RationalVector farkas;
  std::vector<int> basis;
  int pivots = 0;
};

/// Two-phase dense tableau simplex in exact arithmetic with Bland's rule,
/// which rules out cycling. Duals are read from the artificial columns of
/// the final tableau.
LpResult solve_lp(const LinearProgram& lp);

/// True if A x = b, x >= 0 has a solution.
bool lp_feasible(const RationalMatrix& A, const RationalVector& b);

}  // namespace anglekit
