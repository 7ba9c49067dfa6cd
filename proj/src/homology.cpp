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
#include "anglekit/homology.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "anglekit/error.hpp"
#include "union_find.hpp"

namespace anglekit {

namespace {

// Local cell numbering inside one truncated tetrahedron.
int vertex_id(int k, int j) { return 3 * k + (j < k ? j : j - 1); }  // 12 vertices
int shortened_edge_id(int e) { return e; }                          // 6 edges
int truncation_edge_id(int k, int f) { return 6 + 3 * k + (f < k ? f : f - 1); }  // 12 edges
int hexagon_id(int f) { return f; }                                 // 4 faces
int triangle_id(int k) { return 4 + k; }                            // 4 faces

constexpr std::array<int, 4> kLocal = {12, 18, 8, 1};

}  // namespace

Gf2Matrix CellComplex::relative(int k) const {
  const auto& m = boundary[k];
  Gf2Matrix out;
  out.rows = m.rows;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Gf2Vector col(m.rows);
    if (!on_boundary[k][c])
      for (auto r = m.columns[c].find_first(); r != Gf2Vector::npos; r = m.columns[c].find_next(r))
        if (!on_boundary[k - 1][r]) col.set(r);
    out.columns.push_back(col);
  }
  return out;
}

bool CellComplex::boundary_closed() const {
  for (int k = 1; k <= 3; ++k)
    for (std::size_t c = 0; c < cells[k]; ++c) {
      if (!on_boundary[k][c]) continue;
      const auto& col = boundary[k].columns[c];
      for (auto r = col.find_first(); r != Gf2Vector::npos; r = col.find_next(r))
        if (!on_boundary[k - 1][r]) return false;
    }
  return true;
}

bool CellComplex::squares_to_zero() const {
  for (int k = 2; k <= 3; ++k)
    for (const auto& col : boundary[k].columns)
      if (boundary[k - 1].multiply(col).any()) return false;
  return true;
}

long CellComplex::euler_characteristic(bool boundary_only) const {
  long chi = 0;
  for (int k = 0; k <= 3; ++k) {
    long count = 0;
    for (std::size_t c = 0; c < cells[k]; ++c)
      if (!boundary_only || on_boundary[k][c]) ++count;
    chi += (k % 2 == 0 ? count : -count);
  }
  return chi;
}

CellComplex compact_complex(const Triangulation& t) {
  auto open = t.open_faces();
  if (!open.empty())
    throw Error(ErrorCode::OpenFace, "face " + std::to_string(open.front().tet) + "." +
                                         std::to_string(open.front().face) + " is not glued");
  const int n = t.size();
  std::array<detail::UnionFind, 3> classes = {
      detail::UnionFind(kLocal[0] * n), detail::UnionFind(kLocal[1] * n),
      detail::UnionFind(kLocal[2] * n)};
  for (const auto& g : t.gluings()) {
    const int a = g.a.tet, b = g.b.tet;
    const auto& p = g.perm;
    classes[2].unite(8 * a + hexagon_id(g.a.face), 8 * b + hexagon_id(g.b.face));
    auto fv = face_vertices(g.a.face);
    for (int i = 0; i < 3; ++i) {
      int k = fv[i];
      classes[1].unite(18 * a + truncation_edge_id(k, g.a.face),
                       18 * b + truncation_edge_id(p[k], g.b.face));
      for (int j : fv) {
        if (j == k) continue;
        classes[0].unite(12 * a + vertex_id(k, j), 12 * b + vertex_id(p[k], p[j]));
        if (k < j)
          classes[1].unite(18 * a + shortened_edge_id(edge_index(k, j)),
                           18 * b + shortened_edge_id(edge_index(p[k], p[j])));
      }
    }
  }

  CellComplex c;
  std::array<std::vector<int>, 3> label;
  for (int d = 0; d < 3; ++d) {
    label[d] = classes[d].labels();
    c.cells[d] = label[d].empty() ? 0 : *std::max_element(label[d].begin(), label[d].end()) + 1;
  }
  c.cells[3] = n;
  for (int d = 0; d <= 3; ++d) c.on_boundary[d].assign(c.cells[d], false);
  for (int d = 1; d <= 3; ++d) {
    c.boundary[d].rows = c.cells[d - 1];
    c.boundary[d].columns.assign(c.cells[d], Gf2Vector(c.cells[d - 1]));
  }
  c.edge_labels.assign(c.cells[1], "");
  std::vector<bool> filled1(c.cells[1], false), filled2(c.cells[2], false);

  for (int tet = 0; tet < n; ++tet) {
    auto V = [&](int k, int j) { return label[0][12 * tet + vertex_id(k, j)]; };
    auto E = [&](int local) { return label[1][18 * tet + local]; };
    auto F = [&](int local) { return label[2][8 * tet + local]; };
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j)
        if (j != k) c.on_boundary[0][V(k, j)] = true;

    for (int e = 0; e < 6; ++e) {
      int id = E(shortened_edge_id(e));
      if (filled1[id]) continue;
      filled1[id] = true;
      auto [a, b] = kEdgeVertices[e];
      c.boundary[1].columns[id].flip(V(a, b));
      c.boundary[1].columns[id].flip(V(b, a));
      c.edge_labels[id] = "e" + std::to_string(tet) + "." + std::to_string(a) + std::to_string(b);
    }
    for (int k = 0; k < 4; ++k)
      for (int f = 0; f < 4; ++f) {
        if (f == k) continue;
        int id = E(truncation_edge_id(k, f));
        c.on_boundary[1][id] = true;
        if (filled1[id]) continue;
        filled1[id] = true;
        for (int j = 0; j < 4; ++j)
          if (j != k && j != f) c.boundary[1].columns[id].flip(V(k, j));
        c.edge_labels[id] = "c" + std::to_string(tet) + "." + std::to_string(k) + "/" + std::to_string(f);
      }
    for (int f = 0; f < 4; ++f) {
      int id = F(hexagon_id(f));
      if (!filled2[id]) {
        filled2[id] = true;
        for (int a : face_vertices(f)) {
          c.boundary[2].columns[id].flip(E(truncation_edge_id(a, f)));
          for (int b : face_vertices(f))
            if (a < b) c.boundary[2].columns[id].flip(E(shortened_edge_id(edge_index(a, b))));
        }
      }
      c.boundary[3].columns[tet].flip(id);
    }
    for (int k = 0; k < 4; ++k) {
      int id = F(triangle_id(k));
      c.on_boundary[2][id] = true;
      if (!filled2[id]) {
        filled2[id] = true;
        for (int f = 0; f < 4; ++f)
          if (f != k) c.boundary[2].columns[id].flip(E(truncation_edge_id(k, f)));
      }
      c.boundary[3].columns[tet].flip(id);
    }
  }
  return c;
}

namespace {

std::vector<std::size_t> column_order(std::size_t count, std::optional<std::uint64_t> seed) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

// Cycles of z1 modulo the span of b2, as explicit representatives.
H1Result quotient(const Gf2Matrix& d1, const Gf2Matrix& d2, std::optional<std::uint64_t> seed) {
  Gf2Span span(d2.rows);
  for (std::size_t c : column_order(d2.cols(), seed)) span.insert(d2.columns[c]);
  H1Result r;
  for (auto& z : gf2_kernel(d1, column_order(d1.cols(), seed)))
    if (span.insert(z)) r.generators.push_back(z);
  r.rank = r.generators.size();
  return r;
}

Gf2Matrix mask_columns(const Gf2Matrix& m, const std::vector<bool>& keep) {
  Gf2Matrix out = m;
  for (std::size_t c = 0; c < out.cols(); ++c)
    if (!keep[c]) out.columns[c].reset();
  return out;
}

std::vector<bool> complement(const std::vector<bool>& v) {
  std::vector<bool> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = !v[i];
  return out;
}

}  // namespace

H1Result h1_rank(const CellComplex& c, HomologyMode mode, std::optional<std::uint64_t> seed) {
  switch (mode) {
    case HomologyMode::Absolute:
      return quotient(c.boundary[1], c.boundary[2], seed);
    case HomologyMode::Boundary: {
      // Interior edges become zero columns; they must not count as cycles.
      H1Result r = quotient(mask_columns(c.boundary[1], c.on_boundary[1]),
                            mask_columns(c.boundary[2], c.on_boundary[2]), seed);
      std::erase_if(r.generators, [&](const Gf2Vector& z) {
        for (auto e = z.find_first(); e != Gf2Vector::npos; e = z.find_next(e))
          if (!c.on_boundary[1][e]) return true;
        return false;
      });
      r.rank = r.generators.size();
      return r;
    }
    case HomologyMode::Relative: {
      Gf2Matrix d1 = c.relative(1);
      // Boundary edges are zero in the quotient; drop them from the cycles.
      H1Result r = quotient(d1, c.relative(2), seed);
      std::erase_if(r.generators, [&](const Gf2Vector& z) {
        for (auto e = z.find_first(); e != Gf2Vector::npos; e = z.find_next(e))
          if (c.on_boundary[1][e]) return true;
        return false;
      });
      r.rank = r.generators.size();
      return r;
    }
  }
  return {};
}

ZeroMapResult zero_map_check(const CellComplex& c, std::optional<std::uint64_t> seed) {
  ZeroMapResult out;
  out.absolute_generators = h1_rank(c, HomologyMode::Absolute, seed).generators;
  out.relative_generators = h1_rank(c, HomologyMode::Relative, seed).generators;
  const std::size_t edges = c.cells[1];
  const std::size_t rel = out.relative_generators.size();

  Gf2Span span(edges, rel);
  Gf2Matrix d2 = c.relative(2);
  for (std::size_t f : column_order(d2.cols(), seed)) span.insert(d2.columns[f]);
  for (std::size_t i = 0; i < rel; ++i) span.insert(out.relative_generators[i], i);

  for (std::size_t i = 0; i < out.absolute_generators.size(); ++i) {
    Gf2Vector z = out.absolute_generators[i];
    for (std::size_t e = 0; e < edges; ++e)
      if (c.on_boundary[1][e]) z.reset(e);
    Gf2Vector image = span.reduce(z);
    if (z.any()) throw Error(ErrorCode::PreconditionViolated, "cycle outside the relative cycle space");
    if (image.any() && !out.witness) out.witness = i;
    out.matrix.push_back(std::move(image));
  }
  out.is_zero = !out.witness.has_value();
  return out;
}

std::size_t boundary_image_rank(const CellComplex& c) {
  Gf2Span span(c.cells[1]);
  for (const auto& col : c.boundary[2].columns) span.insert(col);
  std::size_t base = span.dimension();
  for (const auto& z : h1_rank(c, HomologyMode::Boundary).generators) span.insert(z);
  return span.dimension() - base;
}

}  // namespace anglekit
