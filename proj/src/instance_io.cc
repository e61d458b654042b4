// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zsm/instance_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "zsm/gf_algebra.h"
#include "zsm/matroid.h"

namespace zsm {
namespace {

// Strict line and token splitter for the formats above.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t line_number() const { return line_; }

  std::vector<std::string_view> next() {
    if (done()) fail("unexpected end of input");
    const auto end = text_.find('\n', pos_);
    if (end == std::string_view::npos) fail("missing LF at end of line");
    const auto line = text_.substr(pos_, end - pos_);
    pos_ = end + 1;
    ++line_;
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    while (true) {
      const auto space = line.find(' ', start);
      const auto token = line.substr(start, space == std::string_view::npos ? line.size() - start : space - start);
      if (token.empty()) fail("empty token (stray or doubled space)");
      for (char c : token) {
        if (static_cast<unsigned char>(c) < 0x21 || static_cast<unsigned char>(c) > 0x7e) fail("non-printable byte");
      }
      tokens.push_back(token);
      if (space == std::string_view::npos) break;
      start = space + 1;
    }
    return tokens;
  }

  std::uint64_t number(std::string_view token) const {
    std::uint64_t value = 0;
    if (token.size() > 1 && token[0] == '0') fail("leading zero in '" + std::string(token) + "'");
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) fail("bad number '" + std::string(token) + "'");
    return value;
  }

  void expect_keyword(const std::vector<std::string_view>& tokens, std::string_view keyword) const {
    if (tokens.front() != keyword) fail("expected '" + std::string(keyword) + "'");
  }

  void expect_count(const std::vector<std::string_view>& tokens, std::size_t count) const {
    if (tokens.size() != count) {
      fail("expected " + std::to_string(count) + " tokens, got " + std::to_string(tokens.size()));
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

FieldSpec parse_field(const LineReader& in, std::uint64_t p, std::uint64_t d) {
  if (p > UINT32_MAX || !is_prime(p)) in.fail("p must be prime");
  if (d == 0 || d > 64) in.fail("d must be in [1, 64]");
  return FieldSpec(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(d));
}

GroupVector parse_residues(const LineReader& in, FieldSpec spec, std::span<const std::string_view> tokens) {
  std::vector<std::uint64_t> coords;
  for (auto token : tokens) {
    const auto c = in.number(token);
    if (c >= spec.p()) in.fail("residue " + std::to_string(c) + " not reduced mod " + std::to_string(spec.p()));
    coords.push_back(c);
  }
  return GroupVector(spec, std::move(coords));
}

void append_coords(std::string& out, const GroupVector& v) {
  for (auto c : v.coords()) {
    out += ' ';
    out += std::to_string(c);
  }
}

}  // namespace

std::string render_instance(const LabelledDigraph& dg) {
  const auto& spec = dg.spec();
  std::string out = std::to_string(spec.p()) + ' ' + std::to_string(spec.d()) + ' ' + std::to_string(dg.size()) + '\n';
  for (std::size_t u = 0; u < dg.size(); ++u) {
    for (std::size_t v = 0; v < dg.size(); ++v) {
      if (u == v) continue;
      out += std::to_string(u) + ' ' + std::to_string(v);
      append_coords(out, dg.weight(u, v));
      out += '\n';
    }
  }
  return out;
}

LabelledDigraph parse_instance(std::string_view text) {
  LineReader in(text);
  const auto header = in.next();
  in.expect_count(header, 3);
  const FieldSpec spec = parse_field(in, in.number(header[0]), in.number(header[1]));
  const auto n = in.number(header[2]);
  if (n < 2) in.fail("n must be at least 2");
  const auto lines = static_cast<std::uint64_t>(std::count(text.begin(), text.end(), '\n'));
  if (n > lines || n * (n - 1) + 1 != lines) {
    in.fail("expected n(n-1) LF-terminated arc lines after the header");
  }

  LabelledDigraph dg(spec, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (in.done()) in.fail("missing arc " + std::to_string(u) + " " + std::to_string(v));
      const auto tokens = in.next();
      in.expect_count(tokens, 2 + spec.d());
      const auto tu = in.number(tokens[0]);
      const auto tv = in.number(tokens[1]);
      if (tu != u || tv != v) {
        in.fail("expected arc " + std::to_string(u) + " " + std::to_string(v) + ", got " + std::to_string(tu) + " " +
                std::to_string(tv));
      }
      dg.set_weight(u, v, parse_residues(in, spec, std::span(tokens).subspan(2)));
    }
  }
  if (!in.done()) in.fail("trailing content after the last arc");
  return dg;
}

std::string render_witness(const CycleWitness& witness) {
  std::string out = "cycle";
  for (auto v : witness.vertices) out += ' ' + std::to_string(v);
  out += "\nsum";
  append_coords(out, witness.sum);
  out += '\n';
  return out;
}

WitnessFile parse_witness(std::string_view text) {
  LineReader in(text);
  WitnessFile w;
  const auto cycle = in.next();
  in.expect_keyword(cycle, "cycle");
  if (cycle.size() < 2) in.fail("empty cycle");
  for (std::size_t i = 1; i < cycle.size(); ++i) w.cycle.push_back(in.number(cycle[i]));
  const auto sum = in.next();
  in.expect_keyword(sum, "sum");
  if (sum.size() < 2) in.fail("empty sum");
  for (std::size_t i = 1; i < sum.size(); ++i) w.sum.push_back(in.number(sum[i]));
  if (!in.done()) in.fail("trailing content after the sum line");
  return w;
}

std::string render_hypergraph(const LabelledHypergraph& h) {
  std::ostringstream out;
  out << "hypergraph " << h.vertex_universe() << ' ' << h.edges().size() << '\n';
  const Matroid& matroid = h.matroid();
  if (const auto* linear = dynamic_cast<const LinearMatroid*>(&matroid)) {
    out << "matroid linear " << linear->spec().p() << ' ' << linear->spec().d() << ' ' << linear->ground_size()
        << '\n';
    for (const auto& v : linear->vectors()) {
      std::string line = "element";
      append_coords(line, v);
      out << line << '\n';
    }
  } else if (dynamic_cast<const FreeMatroid*>(&matroid) != nullptr) {
    out << "matroid free " << matroid.ground_size() << '\n';
  } else {
    throw std::invalid_argument("render_hypergraph: only linear and free matroids can be rendered");
  }
  for (EdgeId e : h.edges()) {
    out << "edge " << to_index(h.label(e));
    for (Vertex v : h.endpoints(e)) out << ' ' << to_index(v);
    out << '\n';
  }
  std::vector<std::size_t> deleted;
  for (std::size_t v = 0; v < h.vertex_universe(); ++v) {
    if (!h.has_vertex(make_id<Vertex>(v))) deleted.push_back(v);
  }
  if (!deleted.empty()) {
    out << "deleted";
    for (auto v : deleted) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

LabelledHypergraph parse_hypergraph(std::string_view text) {
  LineReader in(text);
  const auto header = in.next();
  in.expect_keyword(header, "hypergraph");
  in.expect_count(header, 3);
  const auto vertex_count = in.number(header[1]);
  const auto edge_count = in.number(header[2]);
  if (vertex_count > text.size() || edge_count > text.size()) in.fail("counts exceed the input size");

  const auto kind = in.next();
  in.expect_keyword(kind, "matroid");
  std::shared_ptr<const Matroid> matroid;
  if (kind.size() == 3 && kind[1] == "free") {
    matroid = std::make_shared<const FreeMatroid>(in.number(kind[2]));
  } else if (kind.size() == 5 && kind[1] == "linear") {
    const FieldSpec spec = parse_field(in, in.number(kind[2]), in.number(kind[3]));
    const auto size = in.number(kind[4]);
    if (size > text.size()) in.fail("element count exceeds the input size");
    std::vector<GroupVector> vectors;
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto tokens = in.next();
      in.expect_keyword(tokens, "element");
      in.expect_count(tokens, 1 + spec.d());
      vectors.push_back(parse_residues(in, spec, std::span(tokens).subspan(1)));
    }
    matroid = std::make_shared<const LinearMatroid>(spec, std::move(vectors));
  } else {
    in.fail("unknown matroid block");
  }

  std::vector<Hyperedge> edges;
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    const auto tokens = in.next();
    in.expect_keyword(tokens, "edge");
    if (tokens.size() < 3) in.fail("edge without endpoints");
    Hyperedge edge{{}, make_id<ElementId>(in.number(tokens[1]))};
    for (std::size_t j = 2; j < tokens.size(); ++j) edge.vertices.push_back(make_id<Vertex>(in.number(tokens[j])));
    edges.push_back(std::move(edge));
  }
  std::vector<Vertex> deleted;
  if (!in.done()) {
    const auto tokens = in.next();
    in.expect_keyword(tokens, "deleted");
    for (std::size_t j = 1; j < tokens.size(); ++j) deleted.push_back(make_id<Vertex>(in.number(tokens[j])));
  }
  if (!in.done()) in.fail("trailing content");
  try {
    LabelledHypergraph h(vertex_count, std::move(edges), std::move(matroid));
    return deleted.empty() ? h : h.delete_vertices(deleted);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path.string());
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace zsm
