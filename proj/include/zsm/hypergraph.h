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

#ifndef ZSM_HYPERGRAPH_H_
#define ZSM_HYPERGRAPH_H_

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "zsm/ids.h"
#include "zsm/matroid.h"

namespace zsm {

struct Hyperedge {
  std::vector<Vertex> vertices;  // sorted, no repeats
  ElementId label;
};

// Edge ids of a matching, ascending.
using Matching = std::vector<EdgeId>;

// Multi-hypergraph whose edges carry matroid elements as labels.
//
// A value is a view: the edge store is shared and immutable, and each view
// holds its own active vertex and edge id lists. delete_vertices() returns a
// new view over the same store, so ids and labels never change.
class LabelledHypergraph {
 public:
  // Vertices are 0..vertex_count-1. Edge i gets EdgeId i. Throws
  // std::invalid_argument on an empty edge, an out-of-range endpoint or a
  // label foreign to the matroid. Endpoint lists are sorted and deduplicated.
  LabelledHypergraph(std::size_t vertex_count, std::vector<Hyperedge> edges,
                     std::shared_ptr<const Matroid> matroid);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const EdgeId> edges() const { return edges_; }
  std::size_t vertex_universe() const { return store_->universe; }
  // Edge count of the underlying store (ids are below this).
  std::size_t edge_universe() const { return store_->edges.size(); }

  bool has_vertex(Vertex v) const;
  bool has_edge(EdgeId e) const;

  // Valid for any id of the store, active or not.
  std::span<const Vertex> endpoints(EdgeId e) const;
  ElementId label(EdgeId e) const;

  // Labels of the given edges, in the same order.
  std::vector<ElementId> labels(std::span<const EdgeId> es) const;
  std::vector<ElementId> all_labels() const { return labels(edges_); }

  // Maximum edge size r of the store. Deletion never changes it.
  std::size_t max_edge_size() const { return store_->max_edge_size; }

  const Matroid& matroid() const { return *store_->matroid; }
  const std::shared_ptr<const Matroid>& matroid_ptr() const { return store_->matroid; }

  // H - U. Throws std::invalid_argument when u names an inactive vertex.
  LabelledHypergraph delete_vertices(std::span<const Vertex> u) const;

  // Equality of views is equality of the active vertex and edge id sets.
  bool same_view(const LabelledHypergraph& other) const {
    return store_ == other.store_ && vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  struct Store {
    std::size_t universe = 0;
    std::vector<Hyperedge> edges;
    std::shared_ptr<const Matroid> matroid;
    std::size_t max_edge_size = 0;
  };

  LabelledHypergraph() = default;
  void check_edge(EdgeId e) const;

  std::shared_ptr<const Store> store_;
  std::vector<Vertex> vertices_;
  std::vector<bool> active_vertex_;
  std::vector<EdgeId> edges_;
  std::vector<bool> active_edge_;
};

// e ⊓ m: the edges of m that share a vertex with e.
std::vector<EdgeId> meets(const LabelledHypergraph& h, EdgeId e, std::span<const EdgeId> m);

// Whether the sub-hypergraph formed by x and V(x) is connected.
// Throws std::invalid_argument on an empty x.
bool edge_set_connected(const LabelledHypergraph& h, std::span<const EdgeId> x);

// V(x), ascending.
std::vector<Vertex> covered_vertices(const LabelledHypergraph& h, std::span<const EdgeId> x);

// Pairwise vertex-disjoint active edges with pairwise distinct labels.
bool is_matching(const LabelledHypergraph& h, std::span<const EdgeId> m);
// is_matching and the labels are independent in the matroid.
bool is_independent_matching(const LabelledHypergraph& h, std::span<const EdgeId> m);

}  // namespace zsm

#endif  // ZSM_HYPERGRAPH_H_
