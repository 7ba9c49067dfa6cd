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
#include "anglekit/linalg.hpp"

#include <algorithm>

#include "anglekit/error.hpp"

namespace anglekit {

RationalVector RationalMatrix::row(int r) const {
  return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void RationalMatrix::append_row(const RationalVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw Error(ErrorCode::DimensionMismatch, "row length does not match column count");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RationalVector RationalMatrix::multiply(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match column count");
  RationalVector out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) out[r] += (*this)(r, c) * x[c];
  return out;
}

RationalVector RationalMatrix::multiply_transpose(const RationalVector& y) const {
  if (static_cast<int>(y.size()) != rows_)
    throw Error(ErrorCode::DimensionMismatch, "vector length does not match row count");
  RationalVector out(cols_);
  for (int r = 0; r < rows_; ++r) {
    if (y[r].is_zero()) continue;
    for (int c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out[c] += (*this)(r, c) * y[r];
  }
  return out;
}

EchelonForm rref(const RationalMatrix& m) {
  RationalMatrix a = m;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (int k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(r, k));
    Rational inv = 1 / a(r, c);
    for (int k = c; k < a.cols(); ++k) a(r, k) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (int k = c; k < a.cols(); ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  RationalMatrix reduced(r, a.cols());
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < a.cols(); ++k) reduced(i, k) = a(i, k);
  return {std::move(reduced), std::move(pivots)};
}

int rank(const RationalMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<RationalVector> null_space(const RationalMatrix& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(e.pivots.size()); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace anglekit
