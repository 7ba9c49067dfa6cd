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
#include "anglekit/extreme_points.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <bit>
#include <cstdint>

#include "anglekit/error.hpp"
#include "anglekit/simplex.hpp"

namespace anglekit {

namespace {

// Fixed-width bit set over constraint rows; the pair loop below runs tens of
// millions of times, so intersections are counted without allocating.
struct RowSet {
  std::vector<std::uint64_t> words;
  void resize(int bits) { words.assign((bits + 63) / 64, 0); }
  void set(int i) { words[i / 64] |= std::uint64_t{1} << (i % 64); }
};

int common_count(const RowSet& a, const RowSet& b) {
  int c = 0;
  for (std::size_t w = 0; w < a.words.size(); ++w) c += std::popcount(a.words[w] & b.words[w]);
  return c;
}

// a & b is a subset of c.
bool common_within(const RowSet& a, const RowSet& b, const RowSet& c) {
  for (std::size_t w = 0; w < a.words.size(); ++w)
    if ((a.words[w] & b.words[w]) & ~c.words[w]) return false;
  return true;
}

struct Ray {
  RationalVector z;
  RowSet zeros;  // processed constraints vanishing on z
};

RationalMatrix inverse(const RationalMatrix& m) {
  const int d = m.rows();
  RationalMatrix aug(d, 2 * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) aug(r, c) = m(r, c);
    aug(r, d + r) = 1;
  }
  EchelonForm e = rref(aug);
  RationalMatrix inv(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) inv(r, c) = e.reduced(r, d + c);
  return inv;
}

bool lp_nonempty(const RationalMatrix& q, const ConeConstraints& c) {
  const int n = q.cols();
  std::vector<bool> signed_col(n, false);
  for (int i : c.nonnegative) signed_col[i] = true;
  // Free columns are split as x = x+ - x-.
  std::vector<int> free_cols;
  for (int i = 0; i < n; ++i)
    if (!signed_col[i]) free_cols.push_back(i);
  const int width = n + static_cast<int>(free_cols.size());
  auto widen = [&](const RationalVector& row) {
    RationalVector out(row);
    out.resize(width);
    for (std::size_t k = 0; k < free_cols.size(); ++k) out[n + k] = -row[free_cols[k]];
    return out;
  };
  LinearProgram lp;
  lp.A = RationalMatrix(0, width);
  for (int r = 0; r < q.rows(); ++r) lp.A.append_row(widen(q.row(r)));
  for (int i : c.zero) {
    RationalVector row(n);
    row[i] = 1;
    lp.A.append_row(widen(row));
  }
  RationalVector norm(n);
  for (int i : c.normalization) norm[i] += 1;
  lp.A.append_row(widen(norm));
  lp.b.assign(lp.A.rows(), Rational(0));
  lp.b.back() = 1;
  lp.c.assign(width, Rational(0));
  return solve_lp(lp).status != LpStatus::Infeasible;
}

}  // namespace

ExtremePoints cone_extreme_points(const RationalMatrix& q, const ConeConstraints& constraints,
                                  int column_cap) {
  const int n = q.cols();
  if (n > column_cap)
    throw Error(ErrorCode::SizeCap, std::to_string(n) + " columns exceed the enumeration cap of " +
                                        std::to_string(column_cap));
  auto check_index = [&](int i) {
    if (i < 0 || i >= n) throw Error(ErrorCode::MalformedIndex, "constraint column " + std::to_string(i));
  };
  for (int i : constraints.nonnegative) check_index(i);
  for (int i : constraints.zero) check_index(i);
  for (int i : constraints.normalization) check_index(i);

  // Homogenise with lambda as column n: sum over normalization = lambda >= 0.
  RationalMatrix eq(0, n + 1);
  for (int r = 0; r < q.rows(); ++r) {
    RationalVector row = q.row(r);
    row.push_back(0);
    eq.append_row(row);
  }
  for (int i : constraints.zero) {
    RationalVector row(n + 1);
    row[i] = 1;
    eq.append_row(row);
  }
  RationalVector norm(n + 1);
  for (int i : constraints.normalization) norm[i] += 1;
  norm[n] = -1;
  eq.append_row(norm);

  std::vector<RationalVector> kernel = null_space(eq);
  const int d = static_cast<int>(kernel.size());

  std::vector<int> signed_cols = constraints.nonnegative;
  signed_cols.push_back(n);
  std::sort(signed_cols.begin(), signed_cols.end());
  signed_cols.erase(std::unique(signed_cols.begin(), signed_cols.end()), signed_cols.end());
  const int m = static_cast<int>(signed_cols.size());

  RationalMatrix h(m, d);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k < d; ++k) h(r, k) = kernel[k][signed_cols[r]];

  ExtremePoints out;
  if (d == 0) {
    if (lp_nonempty(q, constraints)) throw std::logic_error("extreme points: LP disagrees (empty)");
    return out;
  }
  if (rank(h) < d) throw Error(ErrorCode::NotPointed, "the constraint polyhedron contains a line");

  // Initial simplicial cone from d independent inequality rows.
  std::vector<int> basis_rows;
  RationalMatrix picked(0, d);
  for (int r = 0; r < m && static_cast<int>(basis_rows.size()) < d; ++r) {
    RationalMatrix trial = picked;
    trial.append_row(h.row(r));
    if (rank(trial) > static_cast<int>(basis_rows.size())) {
      picked = trial;
      basis_rows.push_back(r);
    }
  }
  RationalMatrix inv = inverse(picked);
  std::vector<Ray> rays;
  for (int k = 0; k < d; ++k) {
    Ray ray;
    ray.z.resize(d);
    for (int r = 0; r < d; ++r) ray.z[r] = inv(r, k);
    ray.z = primitive_integer(ray.z);
    ray.zeros.resize(m);
    for (int j = 0; j < d; ++j)
      if (j != k) ray.zeros.set(basis_rows[j]);
    rays.push_back(std::move(ray));
  }
  std::vector<bool> processed(m, false);
  for (int r : basis_rows) processed[r] = true;

  for (int j = 0; j < m; ++j) {
    if (processed[j]) continue;
    processed[j] = true;
    RationalVector hj = h.row(j);
    std::vector<Rational> value(rays.size());
    std::vector<int> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(hj, rays[r].z);
      if (value[r] > 0) pos.push_back(static_cast<int>(r));
      else if (value[r] < 0) neg.push_back(static_cast<int>(r));
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (value[r] >= 0) {
        Ray ray = rays[r];
        if (value[r].is_zero()) ray.zeros.set(j);
        next.push_back(std::move(ray));
      }
    std::vector<std::vector<int>> zero_on(m);
    if (!pos.empty() && !neg.empty())
      for (std::size_t r = 0; r < rays.size(); ++r)
        for (std::size_t w = 0; w < rays[r].zeros.words.size(); ++w)
          for (std::uint64_t bits = rays[r].zeros.words[w]; bits; bits &= bits - 1)
            zero_on[64 * w + std::countr_zero(bits)].push_back(static_cast<int>(r));
    for (int p : pos)
      for (int q_ : neg) {
        const RowSet& a = rays[p].zeros;
        const RowSet& b = rays[q_].zeros;
        if (common_count(a, b) < d - 2) continue;
        // Only rays vanishing on the rarest shared row can contain the
        // common zero set.
        const std::vector<int>* scan = nullptr;
        for (std::size_t w = 0; w < a.words.size(); ++w)
          for (std::uint64_t bits = a.words[w] & b.words[w]; bits; bits &= bits - 1) {
            const auto& list = zero_on[64 * w + std::countr_zero(bits)];
            if (!scan || list.size() < scan->size()) scan = &list;
          }
        bool adjacent = true;
        for (std::size_t k = 0; scan && k < scan->size() && adjacent; ++k) {
          int r = (*scan)[k];
          if (r != p && r != q_ && common_within(a, b, rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray ray;
        ray.z.resize(d);
        for (int k = 0; k < d; ++k) ray.z[k] = value[p] * rays[q_].z[k] - value[q_] * rays[p].z[k];
        ray.z = primitive_integer(ray.z);
        ray.zeros = a;
        for (std::size_t w = 0; w < a.words.size(); ++w) ray.zeros.words[w] &= b.words[w];
        ray.zeros.set(j);
        next.push_back(std::move(ray));
      }
    rays = std::move(next);
  }

  for (const auto& ray : rays) {
    RationalVector x(n + 1);
    for (int k = 0; k < d; ++k)
      if (!ray.z[k].is_zero())
        for (int i = 0; i <= n; ++i) x[i] += ray.z[k] * kernel[k][i];
    Rational lambda = x[n];
    x.pop_back();
    if (lambda > 0) {
      for (auto& v : x) v /= lambda;
      out.vertices.push_back(std::move(x));
    } else {
      out.rays.push_back(primitive_integer(x));
    }
  }
  for (auto* list : {&out.vertices, &out.rays}) {
    std::sort(list->begin(), list->end(), lex_less);
    list->erase(std::unique(list->begin(), list->end()), list->end());
  }
  if (out.vertices.empty() == lp_nonempty(q, constraints))
    throw std::logic_error("extreme points: enumeration and LP disagree on emptiness");
  return out;
}

}  // namespace anglekit
