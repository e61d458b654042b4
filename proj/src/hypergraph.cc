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

#include "zsm/hypergraph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zsm {

LabelledHypergraph::LabelledHypergraph(std::size_t vertex_count, std::vector<Hyperedge> edges,
                                       std::shared_ptr<const Matroid> matroid) {
  if (!matroid) throw std::invalid_argument("hypergraph needs a matroid");
  auto store = std::make_shared<Store>();
  store->universe = vertex_count;
  store->matroid = std::move(matroid);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& e = edges[i];
    if (e.vertices.empty()) throw std::invalid_argument("edge " + std::to_string(i) + " is empty");
    std::sort(e.vertices.begin(), e.vertices.end());
    e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()), e.vertices.end());
    if (to_index(e.vertices.back()) >= vertex_count) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has an out-of-range endpoint");
    }
    if (to_index(e.label) >= store->matroid->ground_size()) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has a label foreign to the matroid");
    }
    store->max_edge_size = std::max(store->max_edge_size, e.vertices.size());
  }
  store->edges = std::move(edges);
  store_ = std::move(store);

  vertices_.resize(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) vertices_[v] = make_id<Vertex>(v);
  active_vertex_.assign(vertex_count, true);
  edges_.resize(store_->edges.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) edges_[i] = make_id<EdgeId>(i);
  active_edge_.assign(edges_.size(), true);
}

bool LabelledHypergraph::has_vertex(Vertex v) const {
  return to_index(v) < active_vertex_.size() && active_vertex_[to_index(v)];
}

bool LabelledHypergraph::has_edge(EdgeId e) const {
  return to_index(e) < active_edge_.size() && active_edge_[to_index(e)];
}

void LabelledHypergraph::check_edge(EdgeId e) const {
  if (to_index(e) >= store_->edges.size()) {
    throw std::out_of_range("unknown edge id " + std::to_string(to_index(e)));
  }
}

std::span<const Vertex> LabelledHypergraph::endpoints(EdgeId e) const {
  check_edge(e);
  return store_->edges[to_index(e)].vertices;
}

ElementId LabelledHypergraph::label(EdgeId e) const {
  check_edge(e);
  return store_->edges[to_index(e)].label;
}

std::vector<ElementId> LabelledHypergraph::labels(std::span<const EdgeId> es) const {
  std::vector<ElementId> out;
  out.reserve(es.size());
  for (EdgeId e : es) out.push_back(label(e));
  return out;
}

LabelledHypergraph LabelledHypergraph::delete_vertices(std::span<const Vertex> u) const {
  LabelledHypergraph out;
  out.store_ = store_;
  out.active_vertex_ = active_vertex_;
  for (Vertex v : u) {
    if (!has_vertex(v)) {
      throw std::invalid_argument("cannot delete inactive vertex " + std::to_string(to_index(v)));
    }
    out.active_vertex_[to_index(v)] = false;
  }
  out.vertices_.reserve(vertices_.size());
  for (Vertex v : vertices_) {
    if (out.active_vertex_[to_index(v)]) out.vertices_.push_back(v);
  }
  out.active_edge_.assign(active_edge_.size(), false);
  out.edges_.reserve(edges_.size());
  for (EdgeId e : edges_) {
    const auto& ends = store_->edges[to_index(e)].vertices;
    const bool kept = std::all_of(ends.begin(), ends.end(),
                                  [&](Vertex v) { return out.active_vertex_[to_index(v)]; });
    if (kept) {
      out.edges_.push_back(e);
      out.active_edge_[to_index(e)] = true;
    }
  }
  return out;
}

namespace {

bool intersects(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

void require_active(const LabelledHypergraph& h, std::span<const EdgeId> x) {
  for (EdgeId e : x) {
    if (!h.has_edge(e)) throw std::invalid_argument("edge " + std::to_string(to_index(e)) + " is not in the hypergraph");
  }
}

}  // namespace

std::vector<EdgeId> meets(const LabelledHypergraph& h, EdgeId e, std::span<const EdgeId> m) {
  require_active(h, std::span<const EdgeId>(&e, 1));
  require_active(h, m);
  std::vector<EdgeId> out;
  const auto ends = h.endpoints(e);
  for (EdgeId f : m) {
    if (intersects(ends, h.endpoints(f))) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool edge_set_connected(const LabelledHypergraph& h, std::span<const EdgeId> x) {
  if (x.empty()) throw std::invalid_argument("edge_set_connected: empty edge set");
  require_active(h, x);
  const auto verts = covered_vertices(h, x);
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto slot = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::size_t components = verts.size();
  for (EdgeId e : x) {
    const auto ends = h.endpoints(e);
    const std::size_t root = find(slot(ends.front()));
    for (Vertex v : ends.subspan(1)) {
      const std::size_t other = find(slot(v));
      if (other != root) {
        parent[other] = root;
        --components;
      }
    }
  }
  return components == 1;
}

std::vector<Vertex> covered_vertices(const LabelledHypergraph& h, std::span<const EdgeId> x) {
  require_active(h, x);
  std::vector<Vertex> out;
  for (EdgeId e : x) {
    const auto ends = h.endpoints(e);
    out.insert(out.end(), ends.begin(), ends.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_matching(const LabelledHypergraph& h, std::span<const EdgeId> m) {
  std::vector<bool> used(h.vertex_universe(), false);
  std::vector<ElementId> labels;
  for (EdgeId e : m) {
    if (!h.has_edge(e)) return false;
    for (Vertex v : h.endpoints(e)) {
      if (used[to_index(v)]) return false;
      used[to_index(v)] = true;
    }
    labels.push_back(h.label(e));
  }
  std::sort(labels.begin(), labels.end());
  return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
}

bool is_independent_matching(const LabelledHypergraph& h, std::span<const EdgeId> m) {
  return is_matching(h, m) && h.matroid().is_independent(h.labels(m));
}

}  // namespace zsm
