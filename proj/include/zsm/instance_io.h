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

#ifndef ZSM_INSTANCE_IO_H_
#define ZSM_INSTANCE_IO_H_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zsm/hypergraph.h"
#include "zsm/zerosum.h"

namespace zsm {

// Text formats. Every format is ASCII, tokens are separated by exactly one
// space and every line, the last included, ends in a single LF. Readers
// reject anything else.
//
// Instance:  "p d n", then one line "u v c_1 ... c_d" per ordered pair of
//            distinct vertices in lexicographic (u, v) order.
// Witness:   "cycle v_0 ... v_{l-1}" and "sum c_1 ... c_d".
// Replay:    "hypergraph <vertices> <edges>", a matroid block, one line
//            "edge <label> <v> ..." per edge and an optional
//            "deleted <v> ..." line.
//            Matroid blocks are "matroid free <n>" or "matroid linear <p> <d>
//            <n>" followed by n lines "element c_1 ... c_d".

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string render_instance(const LabelledDigraph& dg);
// Throws ParseError. Vertex count must be at least 2.
LabelledDigraph parse_instance(std::string_view text);

struct WitnessFile {
  std::vector<std::size_t> cycle;
  std::vector<std::uint64_t> sum;
};

std::string render_witness(const CycleWitness& witness);
// Checks the syntax only; the cycle and sum are checked against an instance
// by the caller. Throws ParseError.
WitnessFile parse_witness(std::string_view text);

// Only linear and free matroids can be rendered; others throw
// std::invalid_argument. Active edges are renumbered densely in id order.
std::string render_hypergraph(const LabelledHypergraph& h);
LabelledHypergraph parse_hypergraph(std::string_view text);

// Whole-file helpers. Throw std::runtime_error on I/O failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace zsm

#endif  // ZSM_INSTANCE_IO_H_
