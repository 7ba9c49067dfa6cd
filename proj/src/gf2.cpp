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
#include "anglekit/gf2.hpp"

#include <numeric>

namespace anglekit {

Gf2Vector Gf2Matrix::multiply(const Gf2Vector& x) const {
  Gf2Vector out(rows);
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (x.test(c)) out ^= columns[c];
  return out;
}

Gf2Vector Gf2Span::reduce(Gf2Vector& v) const {
  Gf2Vector combo(tags_);
  for (auto p = v.find_first(); p != Gf2Vector::npos; p = v.find_next(p)) {
    if (by_pivot_.empty() || by_pivot_[p] < 0) continue;
    const std::size_t i = static_cast<std::size_t>(by_pivot_[p]);
    v ^= vectors_[i];
    combo ^= combos_[i];
  }
  return combo;
}

bool Gf2Span::insert(const Gf2Vector& input, std::optional<std::size_t> tag) {
  if (by_pivot_.empty()) by_pivot_.assign(length_, -1);
  Gf2Vector v = input;
  Gf2Vector combo = reduce(v);
  if (tag) combo.flip(*tag);
  auto p = v.find_first();
  if (p == Gf2Vector::npos) return false;
  by_pivot_[p] = static_cast<std::ptrdiff_t>(vectors_.size());
  pivot_.push_back(p);
  vectors_.push_back(std::move(v));
  combos_.push_back(std::move(combo));
  return true;
}

bool Gf2Span::contains(Gf2Vector v) const {
  reduce(v);
  return v.none();
}

std::size_t gf2_rank(const Gf2Matrix& m) {
  Gf2Span span(m.rows);
  for (const auto& c : m.columns) span.insert(c);
  return span.dimension();
}

std::vector<Gf2Vector> gf2_kernel(const Gf2Matrix& m, const std::vector<std::size_t>& order) {
  std::vector<std::size_t> seq = order;
  if (seq.empty()) {
    seq.resize(m.cols());
    std::iota(seq.begin(), seq.end(), std::size_t{0});
  }
  Gf2Span span(m.rows, m.cols());
  std::vector<Gf2Vector> kernel;
  for (std::size_t c : seq) {
    Gf2Vector v = m.columns[c];
    Gf2Vector combo = span.reduce(v);
    combo.flip(c);
    if (v.none())
      kernel.push_back(std::move(combo));
    else
      span.insert(m.columns[c], c);
  }
  return kernel;
}

}  // namespace anglekit
