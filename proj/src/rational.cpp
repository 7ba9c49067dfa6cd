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

#include "anglekit/rational.hpp"

#include <algorithm>

#include <boost/multiprecision/integer.hpp>

#include "anglekit/error.hpp"

namespace anglekit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateGluing: return "DuplicateGluing";
    case ErrorCode::IdealHyperidealMismatch: return "IdealHyperidealMismatch";
    case ErrorCode::MalformedIndex: return "MalformedIndex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DisconnectedDualGraph: return "DisconnectedDualGraph";
    case ErrorCode::ApexOnFace: return "ApexOnFace";
    case ErrorCode::ConeVertexOnBase: return "ConeVertexOnBase";
    case ErrorCode::InvalidConeVertex: return "InvalidConeVertex";
    case ErrorCode::NotAFan: return "NotAFan";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::ZeroValence: return "ZeroValence";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MissingSemiAngle: return "MissingSemiAngle";
    case ErrorCode::NegativeQuad: return "NegativeQuad";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::OpenFace: return "OpenFace";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownDirective: return "UnknownDirective";
    case ErrorCode::BadPermutation: return "BadPermutation";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false))
    throw Error(ErrorCode::SyntaxError, "not a rational: '" + std::string(text) + "'");
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  Integer numer{n};
  return Rational(numer, d);
}

Integer lcm_of_denominators(const RationalVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  return l;
}

RationalVector primitive_integer(const RationalVector& v) {
  Integer l = lcm_of_denominators(v);
  Integer g = 0;
  for (const auto& x : v) {
    Integer n = numerator(x) * (l / denominator(x));
    g = boost::multiprecision::gcd(g, abs(n));
  }
  if (g == 0) return v;
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x * Rational(l) / Rational(g));
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace anglekit
