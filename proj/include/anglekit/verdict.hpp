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

#include "anglekit/angles.hpp"
#include "anglekit/json_io.hpp"

namespace anglekit {

struct VerdictOptions {
  bool explain = false;  // run every check even when the strict LP succeeds
  SizeCaps caps = SizeCaps::from_environment();
};

struct Verdict {
  int exit_code = 2;  // 0 established, 1 not established, 2 input error
  Json report;
};

/// Runs validate, then (for .dec input) subdivide, then the strict LP; when
/// that fails or explain is set, also the semi and taut searches, both
/// sufficiency checks and the homology hypothesis. Never throws for bad
/// input; the report then carries the error and exit_code is 2.
Verdict run_verdict(const std::filesystem::path& path, const VerdictOptions& options = {});

}  // namespace anglekit
