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
#include <string_view>
#include <vector>

#include "anglekit/error.hpp"

namespace anglekit::detail {

struct Token {
  std::string_view text;
  int column = 1;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

/// Splits text into whitespace-separated tokens per line, dropping blank
/// lines and '#' comment lines.
inline std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty() && line.tokens[0].text[0] != '#') out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

/// Non-negative decimal integer, or -1 if the text is not one.
inline int parse_index(std::string_view s) {
  if (s.empty() || s.size() > 9) return -1;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return -1;
    v = v * 10 + (c - '0');
  }
  return v;
}

[[noreturn]] inline void fail(ErrorCode code, const Line& line, const Token& tok, const std::string& what) {
  throw ParseError(code, line.number, tok.column, what);
}

/// The text after "key=" in tok.
inline std::string_view value_of(const Line& line, const Token& tok, std::string_view key) {
  if (tok.text.substr(0, key.size()) != key || tok.text.size() <= key.size() ||
      tok.text[key.size()] != '=')
    fail(ErrorCode::SyntaxError, line, tok, "expected " + std::string(key) + "=...");
  return tok.text.substr(key.size() + 1);
}

}  // namespace anglekit::detail
