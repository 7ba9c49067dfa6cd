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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anglekit/gf2.hpp"
#include "anglekit/triangulation.hpp"

namespace anglekit {

/// Cellular chain complex over GF(2). boundary[k] maps k-cells to
/// (k-1)-cells for k = 1, 2, 3; on_boundary marks the subcomplex.
struct CellComplex {
  std::array<std::size_t, 4> cells{};
  std::array<Gf2Matrix, 4> boundary;  // index 0 unused
  std::array<std::vector<bool>, 4> on_boundary;
  std::vector<std::string> edge_labels;

  /// Relative boundary map: interior k-cells to interior (k-1)-cells.
  Gf2Matrix relative(int k) const;
  bool boundary_closed() const;
  bool squares_to_zero() const;
  long euler_characteristic(bool boundary_only) const;
};

/// Corner-truncated cells glued along the hexagons. Truncation triangles,
/// their edges and all vertices form the boundary subcomplex.
/// Throws Error(OpenFace) if some face is unglued.
CellComplex compact_complex(const Triangulation& t);

enum class HomologyMode { Absolute, Relative, Boundary };

struct H1Result {
  std::size_t rank = 0;
  std::vector<Gf2Vector> generators;  // 1-chains over all edges of the complex
};

/// Optional seed shuffles the elimination order.
H1Result h1_rank(const CellComplex& c, HomologyMode mode,
                 std::optional<std::uint64_t> shuffle_seed = std::nullopt);

struct ZeroMapResult {
  bool is_zero = true;
  std::vector<Gf2Vector> absolute_generators;
  std::vector<Gf2Vector> relative_generators;
  /// Row i: image of absolute generator i in the relative generators.
  std::vector<Gf2Vector> matrix;
  std::optional<std::size_t> witness;  // first generator with nonzero image
};

ZeroMapResult zero_map_check(const CellComplex& c,
                             std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Rank of the image of H1(boundary) in H1(absolute).
std::size_t boundary_image_rank(const CellComplex& c);

}  // namespace anglekit
