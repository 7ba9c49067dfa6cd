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

#include "anglekit/rational.hpp"

namespace anglekit {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  RationalVector row(int r) const;
  void append_row(const RationalVector& row);

  RationalVector multiply(const RationalVector& x) const;
  /// Transpose times y.
  RationalVector multiply_transpose(const RationalVector& y) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;      // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;     // pivot column of each nonzero row
};

EchelonForm rref(const RationalMatrix& m);

int rank(const RationalMatrix& m);

/// Basis of the null space read off the reduced echelon form: one vector per
/// free column, with a 1 in that column and 0 in the other free columns.
std::vector<RationalVector> null_space(const RationalMatrix& m);

bool is_zero_vector(const RationalVector& v);

}  // namespace anglekit
