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
#include "anglekit/tri_format.hpp"

#include <fstream>
#include <sstream>

#include "anglekit/error.hpp"
#include "text_lines.hpp"

namespace anglekit {

using detail::Line;
using detail::parse_index;
using detail::Token;
using detail::fail;
using detail::value_of;

namespace {

FaceRef parse_face(const Line& line, const Token& tok) {
  auto dot = tok.text.find('.');
  if (dot == std::string_view::npos) fail(ErrorCode::SyntaxError, line, tok, "expected <tet>.<face>");
  int t = parse_index(tok.text.substr(0, dot));
  int f = parse_index(tok.text.substr(dot + 1));
  if (t < 0 || f < 0) fail(ErrorCode::SyntaxError, line, tok, "expected <tet>.<face>");
  if (f > 3) fail(ErrorCode::SyntaxError, line, tok, "face index must be 0..3");
  return {t, f};
}

}  // namespace

TriData parse_tri(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw ParseError(ErrorCode::SyntaxError, 1, 1, "missing 'tri v1' header");
  const Line& head = lines.front();
  if (head.tokens.size() != 2 || head.tokens[0].text != "tri" || head.tokens[1].text != "v1")
    fail(ErrorCode::SyntaxError, head, head.tokens[0], "missing 'tri v1' header");

  TriData data;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& tk = line.tokens;
    if (tk[0].text == "tet") {
      if (tk.size() != 4) fail(ErrorCode::SyntaxError, line, tk[0], "tet takes 3 fields");
      Tetrahedron t;
      t.id = parse_index(tk[1].text);
      if (t.id < 0) fail(ErrorCode::SyntaxError, line, tk[1], "bad tetrahedron id");
      if (t.id != static_cast<int>(data.tets.size()))
        fail(ErrorCode::SyntaxError, line, tk[1], "tetrahedra must be numbered 0..n-1 in order");
      auto kind = value_of(line, tk[2], "kind");
      if (kind == "ideal") t.kind = TetKind::Ideal;
      else if (kind == "flat") t.kind = TetKind::FlatIdeal;
      else if (kind == "trunc") t.kind = TetKind::Truncated13;
      else fail(ErrorCode::SyntaxError, line, tk[2], "kind must be ideal, flat or trunc");
      auto hyper = value_of(line, tk[3], "hyper");
      if (hyper == "-") {
        t.hyperideal_vertex = -1;
      } else {
        t.hyperideal_vertex = parse_index(hyper);
        if (t.hyperideal_vertex < 0 || t.hyperideal_vertex > 3)
          fail(ErrorCode::SyntaxError, line, tk[3], "hyper must be - or 0..3");
      }
      if ((t.kind == TetKind::Truncated13) != (t.hyperideal_vertex >= 0))
        fail(ErrorCode::SyntaxError, line, tk[3], "hyper=<0..3> is required exactly for kind=trunc");
      data.tets.push_back(t);
    } else if (tk[0].text == "glue") {
      if (tk.size() != 4) fail(ErrorCode::SyntaxError, line, tk[0], "glue takes 3 fields");
      FaceRef a = parse_face(line, tk[1]);
      FaceRef b = parse_face(line, tk[2]);
      auto perm = value_of(line, tk[3], "perm");
      if (perm.size() != 3) fail(ErrorCode::BadPermutation, line, tk[3], "perm must list 3 vertex labels");
      std::array<int, 3> images{};
      std::array<bool, 4> seen{};
      for (int i = 0; i < 3; ++i) {
        int v = perm[i] - '0';
        if (v < 0 || v > 3) fail(ErrorCode::BadPermutation, line, tk[3], "perm labels must be 0..3");
        if (v == b.face)
          fail(ErrorCode::BadPermutation, line, tk[3],
               "perm maps onto vertex " + std::to_string(v) + ", which is not on face " + std::to_string(b.face));
        if (seen[v]) fail(ErrorCode::BadPermutation, line, tk[3], "perm repeats a label");
        seen[v] = true;
        images[i] = v;
      }
      data.gluings.push_back(FaceGluing::from_images(a, b, images));
    } else {
      fail(ErrorCode::UnknownDirective, line, tk[0], "unknown directive '" + std::string(tk[0].text) + "'");
    }
  }
  return data;
}

std::string serialize_tri(const TriData& data) {
  std::ostringstream out;
  out << "tri v1\n";
  for (const auto& t : data.tets)
    out << "tet " << t.id << " kind=" << to_string(t.kind) << " hyper="
        << (t.hyperideal_vertex < 0 ? std::string("-") : std::to_string(t.hyperideal_vertex)) << "\n";
  for (const auto& g : data.gluings) {
    auto im = g.images();
    out << "glue " << g.a.tet << "." << g.a.face << " " << g.b.tet << "." << g.b.face << " perm="
        << im[0] << im[1] << im[2] << "\n";
  }
  return out.str();
}

std::string serialize_tri(const Triangulation& t) { return serialize_tri(TriData{t.tets(), t.gluings()}); }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Triangulation load_tri(const std::filesystem::path& path, BuildOptions options) {
  auto data = parse_tri(read_text_file(path));
  return build_triangulation(std::move(data.tets), std::move(data.gluings), options);
}

}  // namespace anglekit
