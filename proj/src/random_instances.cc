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

#include "zsm/random_instances.h"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <vector>

namespace zsm {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t uniform_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

GroupVector random_vector(FieldSpec spec, std::mt19937_64& rng) {
  std::vector<std::uint64_t> coords(spec.d());
  for (auto& c : coords) c = uniform_below(rng, spec.p());
  return GroupVector(spec, std::move(coords));
}

LabelledDigraph random_digraph(FieldSpec spec, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LabelledDigraph dg(spec, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) dg.set_weight(u, v, random_vector(spec, rng));
    }
  }
  return dg;
}

LabelledHypergraph random_linear_hypergraph(std::mt19937_64& rng, const LinearEnsemble& ensemble) {
  const auto d = static_cast<std::uint32_t>(uniform_between(rng, 1, ensemble.max_dimension));
  const FieldSpec spec(ensemble.p, d);
  std::vector<GroupVector> vectors;
  for (std::uint32_t i = 0; i < d; ++i) vectors.push_back(GroupVector::unit(spec, i));
  const std::size_t extra = uniform_below(rng, ensemble.max_extra_elements + 1);
  for (std::size_t i = 0; i < extra; ++i) vectors.push_back(random_vector(spec, rng));
  auto matroid = std::make_shared<const LinearMatroid>(spec, vectors);

  const std::size_t n = uniform_between(rng, ensemble.min_vertices, ensemble.max_vertices);
  const std::size_t r = uniform_between(rng, 1, std::min(ensemble.max_edge_size, n));
  const std::size_t edge_count = uniform_between(rng, 1, ensemble.max_edges);
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < edge_count; ++i) {
    const std::size_t size = uniform_between(rng, 1, r);
    std::vector<Vertex> ends;
    while (ends.size() < size) {
      const auto v = make_id<Vertex>(uniform_below(rng, n));
      if (std::find(ends.begin(), ends.end(), v) == ends.end()) ends.push_back(v);
    }
    edges.push_back({std::move(ends), make_id<ElementId>(uniform_below(rng, vectors.size()))});
  }
  return LabelledHypergraph(n, std::move(edges), std::move(matroid));
}

LabelledHypergraph random_colored_hypergraph(std::mt19937_64& rng, const ColoredEnsemble& ensemble) {
  const std::size_t colors = uniform_between(rng, ensemble.min_colors, ensemble.max_colors);
  const std::size_t n = uniform_between(rng, std::max<std::size_t>(3, ensemble.min_vertices), ensemble.max_vertices);
  const std::size_t edge_count = uniform_between(rng, 1, ensemble.max_edges);
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < edge_count; ++i) {
    std::vector<Vertex> ends;
    while (ends.size() < 3) {
      const auto v = make_id<Vertex>(uniform_below(rng, n));
      if (std::find(ends.begin(), ends.end(), v) == ends.end()) ends.push_back(v);
    }
    edges.push_back({std::move(ends), make_id<ElementId>(uniform_below(rng, colors))});
  }
  return LabelledHypergraph(n, std::move(edges), std::make_shared<const FreeMatroid>(colors));
}

}  // namespace zsm
