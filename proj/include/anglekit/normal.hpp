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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "anglekit/angles.hpp"
#include "anglekit/linalg.hpp"
#include "anglekit/triangulation.hpp"

namespace anglekit {

// Normal coordinates have length 7n: the 3n quadrilateral coordinates
// (tet-major, pairing 01|23, 02|13, 03|12) followed by the 4n triangle
// coordinates (tet-major, by corner).

struct DiscType {
  enum class Kind { Triangle, Quad };
  int tet = 0;
  Kind kind = Kind::Triangle;
  int index = 0;  // corner 0..3 or pairing 0..2

  static DiscType triangle(int tet, int corner) { return {tet, Kind::Triangle, corner}; }
  static DiscType quad(int tet, int pairing) { return {tet, Kind::Quad, pairing}; }
  static DiscType from_column(int n, int column);

  int column(int n) const;
  int sides() const { return kind == Kind::Triangle ? 3 : 4; }
  /// Tet edges crossed by the disc, ascending.
  std::vector<int> edges() const;
  std::string name() const;

  auto operator<=>(const DiscType&) const = default;
};

/// Pairing of the quad whose arc in face f cuts off corner v (v != f).
int quad_at_corner(int v, int f);

/// Per-column arc counts in the geodesic boundary; empty means all zero.
using BoundaryArcs = RationalVector;

/// One row per (gluing, corner of side a's face), corners ascending.
RationalMatrix compatibility_matrix(const Triangulation& t);

/// Null-space basis with one free coordinate set to 1 per vector.
std::vector<RationalVector> kernel_basis(const RationalMatrix& q);

Rational disc_chi_star(const Triangulation& t, const DiscType& d, const BoundaryArcs& b = {});

/// Throws DimensionMismatch or ZeroValence.
Rational chi_star(const Triangulation& t, const RationalVector& s, const BoundaryArcs& b = {});

/// In units of pi. Throws DimensionMismatch.
Rational combinatorial_area(const Triangulation& t, const AngleAssignment& a, const DiscType& d);

Rational chi_A(const Triangulation& t, const AngleAssignment& a, const RationalVector& s);

/// chi*(s) - chi_A(s) - (1/2) sum_q A(q) x_q(s); zero for every semi-angle
/// structure a and kernel element s. Throws PreconditionViolated otherwise.
Rational lt_identity_residual(const Triangulation& t, const AngleAssignment& a,
                              const RationalVector& s);

std::vector<DiscType> vertical_quads(const Triangulation& t, const AngleAssignment& a);

RationalVector link_coordinate(const Triangulation& t, int vertex_class);

struct IntegerizeResult {
  RationalVector coordinate;
  Integer scale;
  std::vector<Integer> link_multiples;  // per vertex class
  bool is_zero = false;
};

/// Clears denominators and adds the fewest vertex links making every
/// triangle coordinate nonnegative. Throws NegativeQuad or
/// PreconditionViolated (s outside the kernel).
IntegerizeResult integerize(const Triangulation& t, const RationalVector& s);

enum class SufficiencyMode { Main1, Prop0 };

struct CheckReport {
  SufficiencyMode mode = SufficiencyMode::Main1;
  bool holds = false;
  std::string summary;
  // main1
  int vertex_count = 0;
  int ray_count = 0;
  std::optional<Rational> worst_chi_star;
  RationalVector witness;  // worst vertex (main1) or nonempty-set point (prop0)
  // prop0
  std::vector<DiscType> vertical;
  std::vector<std::string> notes;
};

/// main1: chi* < 0 on every vertex of {Qs = 0, s >= 0, sum of quads = 1}
/// and chi* <= 0 on every recession ray.
/// prop0: {Qs = 0, s >= 0, non-vertical quads 0, sum of vertical quads = 1}
/// is empty. Requires a; throws MissingSemiAngle without it.
CheckReport check_sufficiency(const Triangulation& t, SufficiencyMode mode,
                              const std::optional<AngleAssignment>& a = std::nullopt,
                              SizeCaps caps = {});

}  // namespace anglekit
