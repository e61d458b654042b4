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

#include <doctest.h>

#include <algorithm>
#include <optional>
#include <memory>
#include <random>

#include "oracles.h"
#include "zsm/errors.h"
#include "zsm/matching_engine.h"
#include "zsm/random_instances.h"

using zsm::EdgeId;
using zsm::ElementId;
using zsm::EngineOptions;
using zsm::FieldSpec;
using zsm::GroupVector;
using zsm::Hyperedge;
using zsm::LabelledHypergraph;
using zsm::Matching;
using zsm::Mode;
using zsm::Vertex;

namespace {

const EngineOptions kExact{.mode = Mode::exact};
const EngineOptions kHeuristic{.mode = Mode::heuristic};

Hyperedge edge(std::initializer_list<std::size_t> vs, std::size_t label) {
  Hyperedge e{{}, zsm::make_id<ElementId>(label)};
  for (auto v : vs) e.vertices.push_back(zsm::make_id<Vertex>(v));
  return e;
}

Matching edge_ids(std::initializer_list<std::size_t> es) {
  Matching out;
  for (auto e : es) out.push_back(zsm::make_id<EdgeId>(e));
  return out;
}

std::vector<Vertex> vertex_ids(std::initializer_list<std::size_t> vs) {
  std::vector<Vertex> out;
  for (auto v : vs) out.push_back(zsm::make_id<Vertex>(v));
  return out;
}

// Hypergraph over Z_2^d whose edge i carries element i with vector labels[i].
LabelledHypergraph z2_hypergraph(std::uint32_t d, std::size_t n, std::vector<std::vector<std::size_t>> ends,
                                 std::vector<std::vector<std::uint64_t>> labels) {
  const FieldSpec spec(2, d);
  std::vector<GroupVector> vs;
  std::vector<Hyperedge> edges;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    vs.emplace_back(spec, labels[i]);
    Hyperedge e{{}, zsm::make_id<ElementId>(i)};
    for (auto v : ends[i]) e.vertices.push_back(zsm::make_id<Vertex>(v));
    edges.push_back(std::move(e));
  }
  return LabelledHypergraph(n, std::move(edges), std::make_shared<const zsm::LinearMatroid>(spec, std::move(vs)));
}

// a = {1,2} -> (1,0) and e = {2,3} -> (0,1).
LabelledHypergraph two_edge_path() { return z2_hypergraph(2, 4, {{1, 2}, {2, 3}}, {{1, 0}, {0, 1}}); }

// A maximal matching {a, b} whose exchange loop stalls at |e ⊓ M| = 2 while
// {c, f} reaches 1. Edges: e, a, b, c, f.
LabelledHypergraph stalling_exchange() {
  return z2_hypergraph(3, 7, {{1, 2}, {1, 3}, {2, 4}, {2, 6}, {3, 4}},
                       {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 1, 0}});
}

Matching active_edges(const LabelledHypergraph& h) { return Matching(h.edges().begin(), h.edges().end()); }

std::optional<EdgeId> span_witness(const LabelledHypergraph& h, const Matching& m) {
  for (EdgeId f : h.edges()) {
    auto grown = m;
    grown.push_back(f);
    if (oracle::label_rank(h, grown) > oracle::label_rank(h, m)) return f;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("extending a matching") {
  const auto empty = z2_hypergraph(2, 3, {}, {});
  CHECK_FALSE(zsm::extend_matching(empty, {}).has_value());

  const auto single = z2_hypergraph(2, 3, {{0, 1}}, {{1, 1}});
  CHECK(zsm::extend_matching(single, {}) == zsm::make_id<EdgeId>(0));

  const auto full = z2_hypergraph(2, 8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, {{1, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK_FALSE(zsm::extend_matching(full, edge_ids({0, 1})).has_value());
  CHECK(zsm::greedy_extend(full, {}) == edge_ids({0, 1}));
}

TEST_CASE("maximal matchings on small examples") {
  for (const auto& opts : {kExact, kHeuristic}) {
    const auto empty = z2_hypergraph(2, 3, {}, {});
    CHECK(zsm::find_maximal_independent_matching(empty, opts).matching.empty());

    const auto pair = z2_hypergraph(2, 4, {{0, 1}, {2, 3}}, {{1, 0}, {0, 1}});
    CHECK(zsm::find_maximal_independent_matching(pair, opts).matching == edge_ids({0, 1}));

    const auto path = two_edge_path();
    const auto result = zsm::find_maximal_independent_matching(path, opts);
    CHECK(result.matching == edge_ids({0}));
    CHECK(oracle::is_maximal(path, result.matching));
  }
  CHECK(zsm::find_maximal_independent_matching(two_edge_path(), kExact).certified);
}

TEST_CASE("exact maximal matchings are maximal for the oracle") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 150; ++i) {
    const auto h = zsm::random_linear_hypergraph(rng);
    const auto result = zsm::find_maximal_independent_matching(h, kExact);
    CHECK(result.certified);
    CHECK(oracle::is_independent_matching(h, result.matching));
    CHECK(oracle::is_maximal(h, result.matching));
    CHECK_FALSE(zsm::find_extendable_same_span(h, result.matching, kExact).has_value());
  }
}

TEST_CASE("heuristic maximal matchings are inclusion-wise maximal") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 300; ++i) {
    const auto h = zsm::random_linear_hypergraph(rng);
    const auto result = zsm::find_maximal_independent_matching(h, kHeuristic);
    CHECK(oracle::is_independent_matching(h, result.matching));
    CHECK_FALSE(zsm::extend_matching(h, result.matching).has_value());
  }
}

TEST_CASE("same-span enumeration matches the oracle") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 100; ++i) {
    const auto h = zsm::random_linear_hypergraph(rng);
    const auto reference = zsm::greedy_extend(h, {});
    std::vector<Matching> seen;
    zsm::for_each_same_span_matching(h, reference, kExact, [&](const Matching& m) {
      seen.push_back(m);
      return false;
    });
    std::vector<Matching> expected;
    for (const auto& m : oracle::independent_matchings(h)) {
      if (oracle::same_span(h, m, reference)) expected.push_back(m);
    }
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    std::sort(expected.begin(), expected.end());
    CHECK(seen == expected);
  }
}

TEST_CASE("exchange leaves a minimiser unchanged") {
  const auto path = two_edge_path();
  const auto e = zsm::make_id<EdgeId>(1);
  const auto result = zsm::exchange_reduce(path, edge_ids({0}), e, kExact);
  CHECK(result.matching == edge_ids({0}));
  CHECK(result.meet_sizes == std::vector<std::size_t>{1});
  CHECK_FALSE(result.minimized_by_enumeration);
}

TEST_CASE("exchange finishes on a minimiser when the loop stalls") {
  const auto h = stalling_exchange();
  const auto e = zsm::make_id<EdgeId>(0);
  const auto start = edge_ids({1, 2});
  REQUIRE(oracle::is_maximal(h, start));
  CHECK(oracle::meet_count(h, e, start) == 2);
  CHECK(oracle::min_meet(h, e, start) == 1);

  // The plain exchange step finds nothing to do in H - V(X).
  const auto x_vertices = zsm::covered_vertices(h, edge_ids({0, 1, 2}));
  CHECK(h.delete_vertices(x_vertices).edges().empty());

  const auto result = zsm::exchange_reduce(h, start, e, kExact);
  CHECK(result.minimized_by_enumeration);
  CHECK(result.matching == edge_ids({3, 4}));
  CHECK(result.meet_sizes == std::vector<std::size_t>{2, 1});

  const auto heuristic = zsm::exchange_reduce(h, start, e, kHeuristic);
  CHECK(heuristic.matching == start);
  CHECK_FALSE(heuristic.extender.has_value());
}

TEST_CASE("exchange preconditions") {
  const auto path = two_edge_path();
  CHECK_THROWS_AS(zsm::exchange_reduce(path, edge_ids({0}), zsm::make_id<EdgeId>(0), kExact), std::invalid_argument);
  CHECK_THROWS_AS(zsm::exchange_reduce(path, {}, zsm::make_id<EdgeId>(1), kExact), std::invalid_argument);
  CHECK_THROWS_AS(zsm::exchange_reduce(path, {}, zsm::make_id<EdgeId>(1), kHeuristic), std::invalid_argument);
  CHECK_THROWS_AS(zsm::exchange_reduce(path, edge_ids({0, 1}), zsm::make_id<EdgeId>(1), kExact),
                  std::invalid_argument);
  CHECK_THROWS_AS(zsm::exchange_reduce(path, edge_ids({0}), zsm::make_id<EdgeId>(7), kExact), std::invalid_argument);
}

TEST_CASE("exact mode refuses large hypergraphs") {
  std::vector<std::vector<std::size_t>> ends;
  std::vector<std::vector<std::uint64_t>> labels;
  for (std::size_t i = 0; i < 21; ++i) {
    ends.push_back({i % 5, 5 + i % 4});
    labels.push_back({i % 2, (i / 2) % 2});
  }
  const auto h = z2_hypergraph(2, 9, ends, labels);
  CHECK_THROWS_AS(zsm::find_maximal_independent_matching(h, kExact), zsm::ResourceError);
  CHECK_THROWS_AS(zsm::bf_best_independent_matching(h), zsm::ResourceError);
  CHECK_NOTHROW(zsm::find_maximal_independent_matching(h, kHeuristic));

  EngineOptions tiny = kExact;
  tiny.enumeration_cap = 1;
  CHECK_THROWS_AS(zsm::find_maximal_independent_matching(two_edge_path(), tiny), zsm::ResourceError);
}

TEST_CASE("peeling the two-edge path") {
  const auto path = two_edge_path();
  const auto peel = zsm::peel_step(path, edge_ids({0}), zsm::make_id<EdgeId>(1), kExact);
  CHECK(peel.x == edge_ids({0, 1}));
  CHECK(peel.k == 1);
  CHECK(peel.residual.empty());
  CHECK(peel.residual_certified);
  const auto rest = path.delete_vertices(vertex_ids({1, 2, 3}));
  CHECK(oracle::is_maximal(rest, peel.residual));
}

TEST_CASE("exchange and peel on random instances") {
  std::mt19937_64 rng(109);
  int checked = 0;
  while (checked < 120) {
    const auto h = zsm::random_linear_hypergraph(rng);
    const auto m = zsm::find_maximal_independent_matching(h, kExact).matching;
    const auto e = span_witness(h, m);
    if (!e) continue;
    ++checked;
    const auto reduced = zsm::exchange_reduce(h, m, *e, kExact);
    CHECK(oracle::is_independent_matching(h, reduced.matching));
    CHECK(oracle::same_span(h, reduced.matching, m));
    CHECK(oracle::meet_count(h, *e, reduced.matching) == oracle::min_meet(h, *e, m));
    for (std::size_t i = 1; i < reduced.meet_sizes.size(); ++i) {
      if (!(reduced.minimized_by_enumeration && i + 1 == reduced.meet_sizes.size())) {
        CHECK(reduced.meet_sizes[i] + 1 == reduced.meet_sizes[i - 1]);
      }
    }

    const auto peel = zsm::peel_step(h, m, *e, kExact);
    CHECK(peel.x.size() == peel.k + 1);
    CHECK(peel.k >= 1);
    CHECK(oracle::connected(h, peel.x));
    const auto removed = zsm::covered_vertices(h, peel.x);
    CHECK(removed.size() <= (h.max_edge_size() - 1) * peel.k + h.max_edge_size());
    CHECK(peel.residual.size() == m.size() - peel.k);
    const auto rest = h.delete_vertices(removed);
    CHECK(oracle::is_independent_matching(rest, peel.residual));
    CHECK(oracle::is_maximal(rest, peel.residual));
  }
}

TEST_CASE("spanning matching on small examples") {
  const auto pair = z2_hypergraph(2, 4, {{0, 1}, {2, 3}}, {{1, 0}, {0, 1}});
  const auto full = zsm::spanning_matching(pair, kExact);
  CHECK(full.kind == zsm::SpanningKind::full_rank);
  CHECK(full.u.empty());
  CHECK(full.matching == edge_ids({0, 1}));

  const auto path = zsm::spanning_matching(two_edge_path(), kExact);
  CHECK(path.kind == zsm::SpanningKind::deficient);
  CHECK(path.u == vertex_ids({1, 2, 3}));
  CHECK(path.a == 1);
  CHECK(path.matching.empty());
  CHECK(path.certified);
  CHECK(path.lemma_k() == 2);
  CHECK(path.within_lemma_budget());
  CHECK(two_edge_path().delete_vertices(path.u).edges().empty());

  const auto rank_zero = LabelledHypergraph(2, {edge({0}, 0)}, std::make_shared<const zsm::LinearMatroid>(
                                                                   FieldSpec(2, 1), std::vector<GroupVector>{
                                                                                        GroupVector(FieldSpec(2, 1))}));
  CHECK_THROWS_AS(zsm::spanning_matching(rank_zero, kExact), std::invalid_argument);
}

TEST_CASE("spanning matching invariants on random instances") {
  std::mt19937_64 rng(113);
  for (const auto& opts : {kExact, kHeuristic}) {
    for (int i = 0; i < 200; ++i) {
      const auto h = zsm::random_linear_hypergraph(rng);
      const auto result = zsm::spanning_matching(h, opts);
      const auto rest = h.delete_vertices(result.u);
      CHECK(oracle::is_independent_matching(rest, result.matching));
      CHECK(oracle::same_span(rest, result.matching, active_edges(rest)));
      CHECK(result.within_peel_budget());
      if (result.kind == zsm::SpanningKind::full_rank) {
        CHECK(result.matching.size() == result.rank);
        CHECK(zsm::bf_best_independent_matching(h).size() == result.rank);
      } else if (result.bookkeeping_consistent()) {
        CHECK(result.within_lemma_budget());
      }
      if (opts.mode == Mode::exact) {
        CHECK(result.certified);
        CHECK_FALSE(result.degraded);
        CHECK(result.bookkeeping_consistent());
      }
    }
  }
}

TEST_CASE("exact spanning matching degrades past the cap") {
  std::vector<std::vector<std::size_t>> ends;
  std::vector<std::vector<std::uint64_t>> labels;
  for (std::size_t i = 0; i < 24; ++i) {
    ends.push_back({i % 6, 6 + i % 5});
    labels.push_back({i % 2, (i / 2) % 2, (i / 4) % 2});
  }
  const auto h = z2_hypergraph(3, 11, ends, labels);
  const auto result = zsm::spanning_matching(h, kExact);
  CHECK(result.degraded);
  CHECK_FALSE(result.certified);
  CHECK(oracle::is_independent_matching(h.delete_vertices(result.u), result.matching));
}

TEST_CASE("disjoint basis matchings") {
  const auto four = z2_hypergraph(2, 8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}, {{1, 0}, {0, 1}, {1, 0}, {0, 1}});
  const auto result = zsm::disjoint_basis_matchings(four, 2, kExact);
  CHECK(result.u.empty());
  REQUIRE(result.matchings.size() == 2);
  for (const auto& m : result.matchings) {
    CHECK(m.size() == 2);
    CHECK(oracle::is_independent_matching(four, m));
  }
  auto both = result.matchings[0];
  both.insert(both.end(), result.matchings[1].begin(), result.matchings[1].end());
  CHECK(zsm::covered_vertices(four, both).size() == 8);
  CHECK(result.lifted.rank == 4);

  CHECK_THROWS_AS(zsm::disjoint_basis_matchings(four, 0, kExact), std::invalid_argument);

  std::mt19937_64 rng(127);
  for (int i = 0; i < 100; ++i) {
    const auto h = zsm::random_linear_hypergraph(rng);
    const auto single = zsm::disjoint_basis_matchings(h, 1, kExact);
    const auto direct = zsm::spanning_matching(h, kExact);
    CHECK(single.u == direct.u);
    REQUIRE(single.matchings.size() == 1);
    CHECK(single.matchings[0] == direct.matching);
  }
}

TEST_CASE("brute-force best matching") {
  const auto empty = z2_hypergraph(2, 3, {}, {});
  CHECK(zsm::bf_best_independent_matching(empty).empty());
  CHECK(zsm::bf_best_independent_matching(z2_hypergraph(2, 3, {{0, 1}}, {{0, 1}})) == edge_ids({0}));
  CHECK(zsm::bf_best_independent_matching(z2_hypergraph(2, 3, {{0, 1}}, {{0, 0}})).empty());

  std::mt19937_64 rng(131);
  for (int i = 0; i < 200; ++i) {
    const auto h = zsm::random_linear_hypergraph(rng);
    const auto best = zsm::bf_best_independent_matching(h);
    const auto all = oracle::independent_matchings(h);
    std::size_t expected = 0;
    for (const auto& m : all) expected = std::max(expected, m.size());
    std::optional<Matching> first;
    for (const auto& m : all) {
      if (m.size() == expected && (!first || m < *first)) first = m;
    }
    CHECK(best.size() == expected);
    CHECK(best == *first);
  }
}

TEST_CASE("free matroid verdict matches the rainbow oracle") {
  std::mt19937_64 rng(137);
  for (int i = 0; i < 200; ++i) {
    const auto h = zsm::random_colored_hypergraph(rng);
    const auto result = zsm::spanning_matching(h, kExact);
    const bool full = result.kind == zsm::SpanningKind::full_rank;
    CHECK(full == oracle::has_rainbow_matching(h, h.matroid().ground_size()));
    if (!full) {
      CHECK(result.within_lemma_budget());
      const auto rest = h.delete_vertices(result.u);
      CHECK(oracle::label_rank(rest, active_edges(rest)) <= result.rank - result.lemma_k());
    }
  }
}
