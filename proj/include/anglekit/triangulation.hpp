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
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "anglekit/rational.hpp"

namespace anglekit {

// Vertex labels of a tetrahedron are 0..3. Edges are numbered by vertex pair
// in the order 01,02,03,12,13,23 and face f is the face opposite vertex f.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int edge_index(int a, int b);

/// The three vertices of face f in ascending order.
std::array<int, 3> face_vertices(int f);

/// The three edges meeting at vertex v, ascending.
std::array<int, 3> corner_edges(int v);

/// Index of the edge opposite e (sharing no vertex with it).
inline int opposite_edge(int e) { return 5 - e; }

enum class TetKind { Ideal, FlatIdeal, Truncated13 };

const char* to_string(TetKind kind);

struct Tetrahedron {
  int id = 0;
  TetKind kind = TetKind::Ideal;
  int hyperideal_vertex = -1;  // 0..3 for Truncated13, -1 otherwise

  bool is_hyperideal(int v) const {
    return kind == TetKind::Truncated13 && v == hyperideal_vertex;
  }
};

struct FaceRef {
  int tet = 0;
  int face = 0;
  auto operator<=>(const FaceRef&) const = default;
};

/// Full vertex permutation: perm[v] is the label in side b of vertex v of
/// side a, and perm[a.face] == b.face.
using Perm4 = std::array<int, 4>;

struct FaceGluing {
  FaceRef a;
  FaceRef b;
  Perm4 perm{0, 1, 2, 3};

  /// images[i] is the image of the i-th vertex (ascending) of face a.face.
  /// The permutation is completed by a.face -> b.face; no validation here.
  static FaceGluing from_images(FaceRef a, FaceRef b, std::array<int, 3> images);

  /// Images of face a's vertices in ascending order.
  std::array<int, 3> images() const;

  Perm4 inverse() const;
};

struct EdgeClass {
  std::vector<std::pair<int, int>> members;  // (tet, edge), sorted
  int valence() const { return static_cast<int>(members.size()); }
};

struct VertexClass {
  std::vector<std::pair<int, int>> members;  // (tet, vertex), sorted
  bool hyperideal = false;
};

struct Neighbour {
  FaceRef face;
  Perm4 perm;  // vertex map from this side to the neighbour
  int gluing = 0;
};

struct BuildOptions {
  /// When false, kind-violating gluings are kept so validate_triangulation
  /// can report them instead of build_triangulation throwing.
  bool enforce_vertex_kinds = true;
};

/// Immutable after construction; build with build_triangulation.
class Triangulation {
 public:
  int size() const { return static_cast<int>(tets_.size()); }
  const std::vector<Tetrahedron>& tets() const { return tets_; }
  const Tetrahedron& tet(int i) const { return tets_.at(i); }
  const std::vector<FaceGluing>& gluings() const { return gluings_; }

  const std::vector<EdgeClass>& edge_classes() const { return edge_classes_; }
  const std::vector<VertexClass>& vertex_classes() const { return vertex_classes_; }
  int edge_class_of(int tet, int edge) const { return edge_class_[6 * tet + edge]; }
  int vertex_class_of(int tet, int vertex) const { return vertex_class_[4 * tet + vertex]; }
  int valence(int tet, int edge) const {
    return edge_classes_[edge_class_of(tet, edge)].valence();
  }

  std::optional<Neighbour> neighbour(FaceRef f) const { return neighbours_[4 * f.tet + f.face]; }
  std::vector<FaceRef> open_faces() const;
  bool is_closed() const { return open_faces().empty(); }
  bool has_hyperideal() const;

 private:
  friend Triangulation build_triangulation(std::vector<Tetrahedron>,
                                           std::vector<FaceGluing>, BuildOptions);
  std::vector<Tetrahedron> tets_;
  std::vector<FaceGluing> gluings_;
  std::vector<std::optional<Neighbour>> neighbours_;
  std::vector<int> edge_class_;
  std::vector<int> vertex_class_;
  std::vector<EdgeClass> edge_classes_;
  std::vector<VertexClass> vertex_classes_;
};

/// Computes edge and vertex classes. Throws Error with MalformedIndex,
/// DuplicateGluing or IdealHyperidealMismatch.
Triangulation build_triangulation(std::vector<Tetrahedron> tets,
                                  std::vector<FaceGluing> gluings,
                                  BuildOptions options = {});

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool ok() const;
  /// First failing check, if any.
  const Check* first_failure() const;
  const Check* find(const std::string& name) const;
};

ValidationReport validate_triangulation(const Triangulation& t);

/// Dihedral angles in units of pi, indexed 6 * tet + edge.
struct AngleAssignment {
  RationalVector alpha;

  const Rational& at(int tet, int edge) const { return alpha[6 * tet + edge]; }
  Rational& at(int tet, int edge) { return alpha[6 * tet + edge]; }
};

enum class AngleMode { Strict, Semi, Taut };

const char* to_string(AngleMode mode);

/// Checks edge sums (= 2), ideal corner sums (= 1), hyperideal corner sums
/// (< 1) and the per-mode range. One check per corner and per edge class.
/// Throws Error(DimensionMismatch) if the assignment is not 6n long.
ValidationReport validate_angles(const Triangulation& t, const AngleAssignment& a,
                                 AngleMode mode);

struct LinkSummary {
  int faces = 0;
  int edges = 0;
  int vertices = 0;
  int boundary_edges = 0;
  int euler_characteristic() const { return vertices - edges + faces; }
};

/// Assembles the link of a vertex class from one normal triangle per corner.
LinkSummary link_surface(const Triangulation& t, int vertex_class);

}  // namespace anglekit
