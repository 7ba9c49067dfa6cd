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

#include <stdexcept>
#include <string>

namespace anglekit {

enum class ErrorCode {
  // core-triangulation
  DuplicateGluing,
  IdealHyperidealMismatch,
  MalformedIndex,
  DimensionMismatch,
  // subdivision
  DisconnectedDualGraph,
  ApexOnFace,
  ConeVertexOnBase,
  InvalidConeVertex,
  NotAFan,
  InvalidDecomposition,
  // angles-lp
  SizeCap,
  // normal-surfaces
  ZeroValence,
  PreconditionViolated,
  MissingSemiAngle,
  NegativeQuad,
  NotPointed,
  // homology
  OpenFace,
  // io
  SyntaxError,
  UnknownDirective,
  BadPermutation,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based line and column into the offending text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace anglekit
