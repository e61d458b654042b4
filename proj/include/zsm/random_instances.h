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

#ifndef ZSM_RANDOM_INSTANCES_H_
#define ZSM_RANDOM_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <random>

#include "zsm/gf_algebra.h"
#include "zsm/hypergraph.h"
#include "zsm/zerosum.h"

namespace zsm {

// Draws from std::mt19937_64 only through this rejection sampler, so seeded
// streams are identical on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
std::uint64_t uniform_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

GroupVector random_vector(FieldSpec spec, std::mt19937_64& rng);

// Uniform i.i.d. arc labels, drawn arc by arc in lexicographic (u, v) order.
LabelledDigraph random_digraph(FieldSpec spec, std::size_t n, std::uint64_t seed);

struct LinearEnsemble {
  std::uint32_t p = 2;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 10;
  std::size_t max_edge_size = 3;
  std::uint32_t max_dimension = 3;
  std::size_t max_edges = 20;
  std::size_t max_extra_elements = 5;
};

// Matroid: the d unit vectors plus a few random (possibly zero or parallel)
// vectors, so the rank is d while the edge labels may span less. Edge sizes
// are uniform in [1, r] for a per-instance r in [1, max_edge_size].
LabelledHypergraph random_linear_hypergraph(std::mt19937_64& rng, const LinearEnsemble& ensemble = {});

struct ColoredEnsemble {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 12;
  std::size_t min_colors = 1;
  std::size_t max_colors = 4;
  std::size_t max_edges = 20;
};

// 3-uniform edges with colors from a free matroid on the colors.
LabelledHypergraph random_colored_hypergraph(std::mt19937_64& rng, const ColoredEnsemble& ensemble = {});

}  // namespace zsm

#endif  // ZSM_RANDOM_INSTANCES_H_
