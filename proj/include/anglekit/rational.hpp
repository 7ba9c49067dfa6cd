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

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace anglekit {

/// Exact arbitrary-precision rational. Angles are stored in units of pi.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;

/// Always "p/q" with q > 0, including integers ("2/1").
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and "-p/q". Throws Error(SyntaxError) otherwise.
Rational parse_rational(std::string_view text);

Integer lcm_of_denominators(const RationalVector& v);

/// Smallest positive multiple of v with coprime integer entries.
/// The zero vector is returned unchanged.
RationalVector primitive_integer(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Lexicographic order on equal-length vectors.
bool lex_less(const RationalVector& a, const RationalVector& b);

}  // namespace anglekit
