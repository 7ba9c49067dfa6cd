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
#include <string>
#include <utility>
#include <vector>

#include "anglekit/triangulation.hpp"

namespace anglekit {

enum class VertexKind { Ideal, Hyperideal };

/// Vertices are numbered 0..k-1; faces are vertex cycles.
struct Polyhedron {
  int id = 0;
  std::vector<VertexKind> vertices;
  std::vector<std::vector<int>> faces;

  int hyperideal_vertex() const;  // -1 if none
  bool truncated() const { return hyperideal_vertex() >= 0; }
  bool face_contains(int face, int v) const;
};

struct PolyFace {
  int poly = 0;
  int face = 0;
  auto operator<=>(const PolyFace&) const = default;
};

/// map holds (vertex of a, vertex of b) for each vertex of a's face.
struct PolyGluing {
  PolyFace a;
  PolyFace b;
  std::vector<std::pair<int, int>> map;

  int image(int v) const;     // -1 if v is not on a's face
  int preimage(int w) const;  // -1 if w is not on b's face
};

struct Decomposition {
  std::vector<Polyhedron> polyhedra;
  std::vector<PolyGluing> gluings;
};

/// Throws Error(InvalidDecomposition) naming the first violated invariant.
void validate_decomposition(const Decomposition& d);

struct DualGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;  // one per gluing, same order
};

DualGraph dual_graph(const Decomposition& d);

struct ConeAssignment {
  std::vector<int> tree_gluings;  // ascending
  std::vector<int> cone_vertex;   // per polyhedron
  std::vector<int> prune_order;
};

/// Breadth-first spanning tree from polyhedron 0 (gluings in order), then
/// leaf pruning by smallest id: a truncated leaf cones at its hyperideal
/// vertex, an ideal leaf at the least vertex off its tree face; the last
/// node cones at its hyperideal vertex or at vertex 0.
/// Throws Error(DisconnectedDualGraph).
ConeAssignment maximal_tree_cone_assignment(const Decomposition& d);

/// Fan apex of every face, per polyhedron. Faces through the cone vertex
/// use it. Across a gluing where exactly one side is fixed that way, the
/// other side takes its image; when neither is, the side with the smaller
/// (polyhedron, face) picks its least vertex and the other side its image.
/// Unglued faces use their least vertex.
std::vector<std::vector<int>> face_apexes(const Decomposition& d, const ConeAssignment& a);

struct ConeTet {
  std::array<int, 4> vertices{};  // polyhedron vertices at tet labels 0..3
  TetKind kind = TetKind::Ideal;
};

/// Tetrahedra {c, w, x, y} over the fan triangles (w, x, y) of every face
/// missing the cone vertex c. face_apex has one entry per face; entries of
/// faces through c must be c or -1.
/// Throws InvalidConeVertex, ApexOnFace or ConeVertexOnBase.
std::vector<ConeTet> cone_polyhedron(const Polyhedron& p, int cone_vertex,
                                     const std::vector<int>& face_apex);

using Diagonal = std::pair<int, int>;     // ascending
using Triangle = std::array<int, 3>;      // ascending

/// Diagonals of the fan of a polygon from apex.
std::vector<Diagonal> fan_diagonals(const std::vector<int>& cycle, int apex);
std::vector<Triangle> fan_triangles(const std::vector<int>& cycle, int apex);

/// All vertex labels are those of side a.
struct Pillow {
  int gluing = 0;
  PolyFace a;
  PolyFace b;
  std::vector<int> cycle;
  int v = 0;
  int v_prime = 0;
  std::vector<Diagonal> diagonals_a;
  std::vector<Diagonal> diagonals_b;
  std::vector<int> path1;  // interior vertices v -> v', first step to the smaller neighbour
  std::vector<int> path2;
  bool informational = false;  // face larger than a hexagon
};

std::vector<Pillow> detect_pillows(const Decomposition& d, const ConeAssignment& a);

struct FlatFace {
  int tet = 0;   // index into LayeredPillow::tets
  int face = 0;
};

struct LayeredPillow {
  std::vector<std::array<int, 4>> tets;  // (v, x, y, v') per flat tetrahedron
  std::vector<FaceGluing> internal;      // tet indices local to tets
  /// Exposed faces of the stack; triangles of a fan not listed pass through.
  std::vector<std::pair<Triangle, FlatFace>> bottom_faces;
  std::vector<std::pair<Triangle, FlatFace>> top_faces;
  std::vector<Triangle> bottom;  // induced triangulation seen from side a
  std::vector<Triangle> top;     // induced triangulation seen from side b
};

/// Flips from the v' end of each boundary path. Throws Error(NotAFan).
LayeredPillow layer_pillow(const Pillow& p);

struct SubdivisionReport {
  ConeAssignment assignment;
  std::vector<std::vector<int>> face_apex;
  std::vector<Pillow> pillows;
  std::vector<int> flat_tets_per_pillow;
  int cone_tets = 0;
  int flat_tets = 0;
  std::vector<int> tree_pillows;  // gluing ids; expected empty
};

struct Subdivision {
  Triangulation triangulation;
  SubdivisionReport report;
};

/// Cone tetrahedra ordered by polyhedron, face and fan position, then flat
/// tetrahedra by gluing.
Subdivision subdivide(const Decomposition& d);

}  // namespace anglekit
