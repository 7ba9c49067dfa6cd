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

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace anglekit {

using Gf2Vector = boost::dynamic_bitset<>;

/// A matrix stored by columns; column c is a bit vector over rows.
struct Gf2Matrix {
  std::size_t rows = 0;
  std::vector<Gf2Vector> columns;

  std::size_t cols() const { return columns.size(); }
  Gf2Vector multiply(const Gf2Vector& x) const;
};

/// Row-reduced span with optional tags: every stored vector remembers which
/// tagged inputs it is the sum of.
class Gf2Span {
 public:
  Gf2Span(std::size_t length, std::size_t tags = 0) : length_(length), tags_(tags) {}

  /// Returns false (and stores nothing) if v is already in the span.
  bool insert(const Gf2Vector& v, std::optional<std::size_t> tag = std::nullopt);
  /// Reduces v in place; returns the tags of the subtracted combination.
  Gf2Vector reduce(Gf2Vector& v) const;
  bool contains(Gf2Vector v) const;
  std::size_t dimension() const { return pivot_.size(); }

 private:
  std::size_t length_;
  std::size_t tags_;
  std::vector<std::size_t> pivot_;
  std::vector<Gf2Vector> vectors_;
  std::vector<Gf2Vector> combos_;
  std::vector<std::ptrdiff_t> by_pivot_;
};

std::size_t gf2_rank(const Gf2Matrix& m);

/// Kernel basis, processing columns in the given order (identity if empty).
std::vector<Gf2Vector> gf2_kernel(const Gf2Matrix& m, const std::vector<std::size_t>& order = {});

}  // namespace anglekit
