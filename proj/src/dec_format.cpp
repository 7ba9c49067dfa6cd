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
#include "anglekit/dec_format.hpp"

#include <sstream>

#include "anglekit/error.hpp"
#include "anglekit/tri_format.hpp"
#include "text_lines.hpp"

namespace anglekit {

using detail::fail;
using detail::Line;
using detail::parse_index;
using detail::Token;
using detail::value_of;

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

int index_field(const Line& line, const Token& tok, std::string_view text) {
  int v = parse_index(text);
  if (v < 0) fail(ErrorCode::SyntaxError, line, tok, "expected a non-negative index, got '" + std::string(text) + "'");
  return v;
}

PolyFace parse_poly_face(const Line& line, const Token& tok) {
  auto parts = split(tok.text, '.');
  if (parts.size() != 2) fail(ErrorCode::SyntaxError, line, tok, "expected <poly>.<face>");
  return {index_field(line, tok, parts[0]), index_field(line, tok, parts[1])};
}

}  // namespace

Decomposition parse_dec(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw ParseError(ErrorCode::SyntaxError, 1, 1, "missing 'dec v1' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0].text != "dec" || head.tokens[1].text != "v1")
    fail(ErrorCode::SyntaxError, head, head.tokens[0], "missing 'dec v1' header");

  Decomposition d;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& tk = line.tokens;
    const auto directive = tk[0].text;
    if (directive == "poly") {
      if (tk.size() != 2) fail(ErrorCode::SyntaxError, line, tk[0], "poly takes 1 field");
      int id = index_field(line, tk[1], tk[1].text);
      if (id != static_cast<int>(d.polyhedra.size()))
        fail(ErrorCode::SyntaxError, line, tk[1], "polyhedra must be numbered 0..n-1 in order");
      d.polyhedra.push_back(Polyhedron{id, {}, {}});
    } else if (directive == "vtx" || directive == "face") {
      if (d.polyhedra.empty()) fail(ErrorCode::SyntaxError, line, tk[0], std::string(directive) + " before any poly");
      if (tk.size() != 3) fail(ErrorCode::SyntaxError, line, tk[0], std::string(directive) + " takes 2 fields");
      auto& p = d.polyhedra.back();
      int id = index_field(line, tk[1], tk[1].text);
      if (directive == "vtx") {
        if (id != static_cast<int>(p.vertices.size()))
          fail(ErrorCode::SyntaxError, line, tk[1], "vertices must be numbered 0..k-1 in order");
        auto kind = value_of(line, tk[2], "kind");
        if (kind == "ideal") p.vertices.push_back(VertexKind::Ideal);
        else if (kind == "hyper") p.vertices.push_back(VertexKind::Hyperideal);
        else fail(ErrorCode::SyntaxError, line, tk[2], "kind must be ideal or hyper");
      } else {
        if (id != static_cast<int>(p.faces.size()))
          fail(ErrorCode::SyntaxError, line, tk[1], "faces must be numbered 0..m-1 in order");
        std::vector<int> cycle;
        for (auto v : split(value_of(line, tk[2], "cycle"), ',')) cycle.push_back(index_field(line, tk[2], v));
        p.faces.push_back(std::move(cycle));
      }
    } else if (directive == "glue") {
      if (tk.size() != 4) fail(ErrorCode::SyntaxError, line, tk[0], "glue takes 3 fields");
      PolyGluing g;
      g.a = parse_poly_face(line, tk[1]);
      g.b = parse_poly_face(line, tk[2]);
      for (auto pair : split(value_of(line, tk[3], "map"), ',')) {
        auto ends = split(pair, ':');
        if (ends.size() != 2) fail(ErrorCode::SyntaxError, line, tk[3], "map entries are <v>:<v'>");
        g.map.emplace_back(index_field(line, tk[3], ends[0]), index_field(line, tk[3], ends[1]));
      }
      d.gluings.push_back(std::move(g));
    } else {
      fail(ErrorCode::UnknownDirective, line, tk[0], "unknown directive '" + std::string(directive) + "'");
    }
  }
  return d;
}

std::string serialize_dec(const Decomposition& d) {
  std::ostringstream out;
  out << "dec v1\n";
  for (const auto& p : d.polyhedra) {
    out << "poly " << p.id << "\n";
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
      out << "vtx " << v << " kind=" << (p.vertices[v] == VertexKind::Ideal ? "ideal" : "hyper") << "\n";
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
      out << "face " << f << " cycle=";
      for (std::size_t i = 0; i < p.faces[f].size(); ++i) out << (i ? "," : "") << p.faces[f][i];
      out << "\n";
    }
  }
  for (const auto& g : d.gluings) {
    out << "glue " << g.a.poly << "." << g.a.face << " " << g.b.poly << "." << g.b.face << " map=";
    for (std::size_t i = 0; i < g.map.size(); ++i)
      out << (i ? "," : "") << g.map[i].first << ":" << g.map[i].second;
    out << "\n";
  }
  return out.str();
}

Decomposition load_dec(const std::filesystem::path& path) { return parse_dec(read_text_file(path)); }

}  // namespace anglekit
