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

#include "oracles.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zsm/matroid.h"

namespace oracle {
namespace {

Coords add(std::uint32_t p, const Coords& a, const Coords& b) {
  Coords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % p;
  return out;
}

std::vector<Coords> label_vectors(const zsm::LabelledHypergraph& h, const std::vector<zsm::EdgeId>& edges) {
  const auto* linear = dynamic_cast<const zsm::LinearMatroid*>(&h.matroid());
  if (linear == nullptr) throw std::logic_error("oracle: not a linear matroid");
  std::vector<Coords> out;
  for (auto e : edges) out.push_back(coords_of(linear->vector(h.label(e))));
  return out;
}

bool disjoint(const zsm::LabelledHypergraph& h, zsm::EdgeId a, zsm::EdgeId b) {
  for (auto u : h.endpoints(a)) {
    for (auto v : h.endpoints(b)) {
      if (u == v) return false;
    }
  }
  return true;
}

}  // namespace

Coords coords_of(const zsm::GroupVector& v) { return Coords(v.coords().begin(), v.coords().end()); }

std::set<Coords> span_set(std::uint32_t p, std::uint32_t d, const std::vector<Coords>& vs) {
  std::set<Coords> span{Coords(d, 0)};
  for (const auto& v : vs) {
    std::set<Coords> next;
    for (const auto& s : span) {
      Coords cur = s;
      for (std::uint32_t c = 0; c < p; ++c) {
        next.insert(cur);
        cur = add(p, cur, v);
      }
    }
    span = std::move(next);
  }
  return span;
}

std::size_t rank(std::uint32_t p, std::uint32_t d, const std::vector<Coords>& vs) {
  std::size_t size = span_set(p, d, vs).size();
  std::size_t r = 0;
  while (size > 1) {
    size /= p;
    ++r;
  }
  return r;
}

std::set<Coords> subset_sums(std::uint32_t p, std::uint32_t d, const std::vector<Coords>& vs) {
  std::set<Coords> sums;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    Coords s(d, 0);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask >> i & 1) s = add(p, s, vs[i]);
    }
    sums.insert(s);
  }
  return sums;
}

std::size_t label_rank(const zsm::LabelledHypergraph& h, const std::vector<zsm::EdgeId>& edges) {
  if (dynamic_cast<const zsm::FreeMatroid*>(&h.matroid()) != nullptr) {
    std::set<std::uint32_t> colors;
    for (auto e : edges) colors.insert(zsm::to_index(h.label(e)));
    return colors.size();
  }
  const auto* linear = dynamic_cast<const zsm::LinearMatroid*>(&h.matroid());
  if (linear == nullptr) throw std::logic_error("oracle: unsupported matroid");
  return rank(linear->spec().p(), linear->spec().d(), label_vectors(h, edges));
}

bool same_span(const zsm::LabelledHypergraph& h, const std::vector<zsm::EdgeId>& a,
               const std::vector<zsm::EdgeId>& b) {
  std::vector<zsm::EdgeId> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const auto r = label_rank(h, both);
  return label_rank(h, a) == r && label_rank(h, b) == r;
}

bool is_independent_matching(const zsm::LabelledHypergraph& h, const std::vector<zsm::EdgeId>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!h.has_edge(m[i])) return false;
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m[i] == m[j] || !disjoint(h, m[i], m[j])) return false;
    }
  }
  return label_rank(h, m) == m.size();
}

std::vector<std::vector<zsm::EdgeId>> independent_matchings(const zsm::LabelledHypergraph& h) {
  const std::vector<zsm::EdgeId> edges(h.edges().begin(), h.edges().end());
  std::vector<std::vector<zsm::EdgeId>> out;
  std::vector<zsm::EdgeId> chosen;
  auto grow = [&](auto&& self, std::size_t from) -> void {
    out.push_back(chosen);
    for (std::size_t i = from; i < edges.size(); ++i) {
      bool ok = true;
      for (auto c : chosen) ok = ok && disjoint(h, c, edges[i]);
      if (!ok) continue;
      chosen.push_back(edges[i]);
      if (label_rank(h, chosen) == chosen.size()) self(self, i + 1);
      chosen.pop_back();
    }
  };
  grow(grow, 0);
  return out;
}

bool is_maximal(const zsm::LabelledHypergraph& h, const std::vector<zsm::EdgeId>& m) {
  for (const auto& other : independent_matchings(h)) {
    if (!same_span(h, other, m)) continue;
    for (auto e : h.edges()) {
      if (std::find(other.begin(), other.end(), e) != other.end()) continue;
      auto grown = other;
      grown.push_back(e);
      if (is_independent_matching(h, grown)) return false;
    }
  }
  return true;
}

std::size_t meet_count(const zsm::LabelledHypergraph& h, zsm::EdgeId e, const std::vector<zsm::EdgeId>& m) {
  std::size_t count = 0;
  for (auto f : m) count += disjoint(h, e, f) ? 0 : 1;
  return count;
}

std::size_t min_meet(const zsm::LabelledHypergraph& h, zsm::EdgeId e, const std::vector<zsm::EdgeId>& m) {
  std::size_t best = SIZE_MAX;
  for (const auto& other : independent_matchings(h)) {
    if (same_span(h, other, m)) best = std::min(best, meet_count(h, e, other));
  }
  return best;
}

bool connected(const zsm::LabelledHypergraph& h, const std::vector<zsm::EdgeId>& x) {
  if (x.empty()) return false;
  std::vector<bool> reached(x.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!reached[j] && !disjoint(h, x[i], x[j])) {
        reached[j] = true;
        stack.push_back(j);
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

std::vector<zsm::EdgeId> edges_avoiding(const zsm::LabelledHypergraph& h, const std::vector<zsm::Vertex>& removed) {
  std::vector<zsm::EdgeId> out;
  for (auto e : h.edges()) {
    bool keep = true;
    for (auto v : h.endpoints(e)) keep = keep && std::find(removed.begin(), removed.end(), v) == removed.end();
    if (keep) out.push_back(e);
  }
  return out;
}

bool has_rainbow_matching(const zsm::LabelledHypergraph& h, std::size_t colors) {
  std::vector<std::vector<zsm::EdgeId>> by_color(colors);
  for (auto e : h.edges()) by_color.at(zsm::to_index(h.label(e))).push_back(e);
  std::vector<zsm::EdgeId> chosen;
  auto pick = [&](auto&& self, std::size_t color) -> bool {
    if (color == colors) return true;
    for (auto e : by_color[color]) {
      bool ok = true;
      for (auto c : chosen) ok = ok && disjoint(h, c, e);
      if (!ok) continue;
      chosen.push_back(e);
      if (self(self, color + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return pick(pick, 0);
}

bool cycle_is_zero(const zsm::LabelledDigraph& dg, const std::vector<std::size_t>& cycle) {
  const auto p = dg.spec().p();
  Coords sum(dg.spec().d(), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    sum = add(p, sum, coords_of(dg.weight(cycle[i], cycle[(i + 1) % cycle.size()])));
  }
  return std::all_of(sum.begin(), sum.end(), [](std::uint32_t c) { return c == 0; });
}

std::optional<std::vector<std::size_t>> zero_sum_cycle(const zsm::LabelledDigraph& dg) {
  const std::size_t n = dg.size();
  if (n > 9) throw std::logic_error("oracle: too many vertices");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1) vs.push_back(v);
    }
    if (vs.size() < 2) continue;
    // vs[0] is the minimum; permute the rest.
    do {
      if (cycle_is_zero(dg, vs)) return vs;
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return std::nullopt;
}

}  // namespace oracle
