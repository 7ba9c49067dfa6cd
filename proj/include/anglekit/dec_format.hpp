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

#include <filesystem>
#include <string>
#include <string_view>

#include "anglekit/subdivision.hpp"

namespace anglekit {

// Line-oriented ".dec" text format for polyhedral decompositions:
//
//   dec v1
//   poly <id>
//   vtx <id> kind=<ideal|hyper>
//   face <id> cycle=<v,v,...>
//   glue <p>.<f> <p'>.<f'> map=<v:v',...>
//
// vtx and face lines belong to the preceding poly. Ids are consecutive
// from 0. Blank lines and '#' comment lines are ignored.

/// Throws ParseError (SyntaxError, UnknownDirective). Structural checks are
/// left to validate_decomposition.
Decomposition parse_dec(std::string_view text);

std::string serialize_dec(const Decomposition& d);

Decomposition load_dec(const std::filesystem::path& path);

}  // namespace anglekit
