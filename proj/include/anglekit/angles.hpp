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

#include <optional>
#include <string>
#include <vector>

#include "anglekit/linalg.hpp"
#include "anglekit/triangulation.hpp"

namespace anglekit {

/// Enumeration limits shared by the exhaustive searches. The environment
/// variable ANGLEKIT_SIZE_CAP=N sets taut_tets = N and extreme_columns = 7N.
struct SizeCaps {
  int taut_tets = 24;
  int extreme_columns = 7 * 20;

  static SizeCaps from_environment();
};

struct AngleRow {
  enum class Kind { Corner, Edge };
  Kind kind = Kind::Corner;
  int tet = -1;         // corner rows
  int vertex = -1;      // corner rows
  int edge_class = -1;  // edge rows
  bool hyperideal = false;
};

/// The linear system B alpha = (a, b) over the 6n dihedral angles. Rows are
/// the 4n corner equations (tet-major) followed by one row per edge class.
/// rhs holds 1 for every corner (the supremum for hyperideal corners, whose
/// true right-hand side is only bounded above by 1) and 2 for every edge.
struct AngleSystem {
  RationalMatrix matrix;
  RationalVector rhs;
  std::vector<AngleRow> rows;

  int corner_rows() const;
  std::vector<int> hyperideal_rows() const;
};

AngleSystem assemble_angle_system(const Triangulation& t);

/// Dual vector y = (h, z) over the rows of an AngleSystem.
///
/// Strict certificates prove that no angle structure exists:
///   B^T y <= 0, h_k <= 0 on hyperideal rows, (B^T y, h_hyper) != 0 and
///   y . rhs >= 0.
/// Semi certificates prove that no semi-angle structure exists:
///   B^T y <= 0, h_k <= 0 on hyperideal rows, and either y . rhs > 0, or
///   y . rhs >= 0 with h_k < 0 on some hyperideal row.
/// The hyperideal-row sign conditions make the single check at rhs = 1 cover
/// every admissible corner value below 1.
struct FarkasCertificate {
  AngleMode mode = AngleMode::Strict;
  RationalVector y;
};

/// Exact check of the conditions above, independent of the solver.
/// Throws Error(DimensionMismatch) if y has the wrong length.
bool verify_certificate(const AngleSystem& system, const FarkasCertificate& c);

struct SolveResult {
  bool feasible = false;
  AngleAssignment angles;          // when feasible
  RationalVector hyperideal_sums;  // corner sums at hyperideal rows, row order
  std::optional<FarkasCertificate> certificate;  // when infeasible
  Rational slack;                  // optimal epsilon
  int lp_solves = 0;
};

/// Strict: maximises the common lower bound epsilon on every angle and on
/// every hyperideal corner deficit; feasible iff the optimum is positive,
/// otherwise the certificate comes from the final dual.
/// Semi: angles in [0,1] with hyperideal corner sums below 1; the returned
/// structure lies in the relative interior of the semi-angle polytope, so
/// its vertical quads are exactly those vertical for every semi-angle
/// structure.
/// Taut is not an LP mode; use search_taut.
SolveResult solve_angles(const Triangulation& t, AngleMode mode);

/// Depth-first search over the three opposite-pair patterns of each ideal or
/// flat tetrahedron; returns the lexicographically first taut structure.
/// Throws Error(SizeCap) when t has more than cap tetrahedra.
std::optional<AngleAssignment> search_taut(const Triangulation& t, int cap = SizeCaps{}.taut_tets);

/// Scales y to the primitive integer vector with the same direction.
FarkasCertificate normalized(FarkasCertificate c);

}  // namespace anglekit
