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
#include <vector>

#include "anglekit/triangulation.hpp"

namespace anglekit {

// Line-oriented ".tri" text format:
//
//   tri v1
//   tet <id> kind=<ideal|flat|trunc> hyper=<-|0|1|2|3>
//   glue <t>.<f> <t'>.<f'> perm=<xyz>
//
// perm lists the images, as vertex labels of t', of face f's vertices taken
// in ascending label order. Blank lines and lines starting with '#' are
// ignored; any other unknown directive is rejected.

struct TriData {
  std::vector<Tetrahedron> tets;
  std::vector<FaceGluing> gluings;
};

/// Throws ParseError (SyntaxError, UnknownDirective, BadPermutation).
TriData parse_tri(std::string_view text);

std::string serialize_tri(const Triangulation& t);
std::string serialize_tri(const TriData& data);

std::string read_text_file(const std::filesystem::path& path);

/// parse_tri + build_triangulation on a file's contents.
Triangulation load_tri(const std::filesystem::path& path, BuildOptions options = {});

}  // namespace anglekit
