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

#include <string>

#include <nlohmann/json.hpp>

#include "anglekit/angles.hpp"
#include "anglekit/homology.hpp"
#include "anglekit/normal.hpp"
#include "anglekit/subdivision.hpp"
#include "anglekit/triangulation.hpp"

namespace anglekit {

using Json = nlohmann::ordered_json;

// Rationals are always strings "p/q"; key order is fixed so output is
// byte-stable.

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Rational rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j);

Json to_json(const ValidationReport& r);
Json to_json(const Triangulation& t);  // summary: sizes, classes, valences
Json to_json(const AngleAssignment& a, int tets);  // per-tet arrays of 6

/// Accepts a flat array of 6n rationals, an array of n arrays of 6, or an
/// object with an "angles" field holding either.
AngleAssignment angles_from_json(const Json& j, int tets);

/// Accepts a flat array of 7n rationals or an object with "coordinates".
RationalVector coordinate_from_json(const Json& j, int tets);
Json coordinate_to_json(const RationalVector& s);

Json to_json(const SolveResult& r, AngleMode mode, const Triangulation& t);

/// Self-contained certificate file: row map, right-hand side, sparse
/// matrix and y, so it can be checked without this library.
Json certificate_to_json(const AngleSystem& s, const FarkasCertificate& c);
FarkasCertificate certificate_from_json(const Json& j);

Json to_json(const CheckReport& r);
Json to_json(const ZeroMapResult& z, const CellComplex& c);
Json homology_report(const CellComplex& c);
Json to_json(const SubdivisionReport& r);

AngleMode angle_mode_from_string(const std::string& s);

/// Indented, stable text with a trailing newline.
std::string dump(const Json& j);

}  // namespace anglekit
