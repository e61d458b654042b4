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

#ifndef ZSM_MATCHING_ENGINE_H_
#define ZSM_MATCHING_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zsm/hypergraph.h"

namespace zsm {

// Independent matchings in matroid-labelled hypergraphs.
//
// Terminology used below:
//   inclusion-wise maximal  no single edge extends the matching.
//   maximal                 every independent matching with the same label
//                           span is inclusion-wise maximal. This depends on
//                           the span only.
//
// Exact mode certifies maximality by exhaustive enumeration and is limited
// by EngineOptions caps. Heuristic mode replaces the enumeration with greedy
// extension plus local exchanges; its results satisfy every verifiable
// postcondition but maximality is not certified.

enum class Mode { exact, heuristic };

struct EngineOptions {
  Mode mode = Mode::heuristic;
  // Exact enumeration refuses hypergraphs with more active edges than this.
  std::size_t exact_edge_cap = 20;
  // Exact enumeration gives up after examining this many partial matchings.
  std::uint64_t enumeration_cap = 1'000'000;
};

// Lowest-id active edge that extends m to a larger independent matching.
std::optional<EdgeId> extend_matching(const LabelledHypergraph& h, const Matching& m);

// Adds extending edges in ascending id order until none is left.
Matching greedy_extend(const LabelledHypergraph& h, Matching m);

struct MaximalMatching {
  Matching matching;
  bool certified = false;
};

// Exact mode: throws ResourceError past the caps.
MaximalMatching find_maximal_independent_matching(const LabelledHypergraph& h,
                                                  const EngineOptions& options = {});

// An independent matching that is not inclusion-wise maximal.
struct ExtendableMatching {
  Matching matching;
  EdgeId extender;
};

// First independent matching (lexicographic id order) whose label span equals
// span(labels(reference)) and which some edge extends; the extender is the
// lowest such edge. nullopt certifies that reference is maximal.
std::optional<ExtendableMatching> find_extendable_same_span(const LabelledHypergraph& h,
                                                            const Matching& reference,
                                                            const EngineOptions& options = {});

// Visits every independent matching with the same label span as reference in
// lexicographic id order until visit returns true.
void for_each_same_span_matching(const LabelledHypergraph& h, const Matching& reference,
                                 const EngineOptions& options,
                                 const std::function<bool(const Matching&)>& visit);

struct ExchangeResult {
  Matching matching;
  // |e ⊓ M| before the first exchange and after each accepted exchange.
  std::vector<std::size_t> meet_sizes;
  // Exact mode only: the exchange fixed point was not a minimiser of
  // |e ⊓ M| and the lexicographically first minimiser was taken instead.
  bool minimized_by_enumeration = false;
  // Heuristic mode only: `matching` plus this edge is a strictly larger
  // independent matching, so the input was not maximal after all.
  std::optional<EdgeId> extender;
};

// Repeats the exchange step M -> M' ∪ (M ∩ X) ∪ {e*} \ {e'} while it applies.
// Exact mode searches every same-span matching M' of H - V(X) and finishes on
// a minimiser of |e ⊓ M|; heuristic mode tries M' = M \ X only.
// Throws std::invalid_argument when m is not an independent matching, is not
// maximal (exact) / inclusion-wise maximal (heuristic), or when label(e) is
// in span(labels(m)).
ExchangeResult exchange_reduce(const LabelledHypergraph& h, const Matching& m, EdgeId e,
                               const EngineOptions& options = {});

struct PeelResult {
  std::vector<EdgeId> x;  // {e} ∪ (e ⊓ reduced), ascending
  std::size_t k = 0;      // |x| - 1
  Matching reduced;       // exchange_reduce output
  Matching residual;      // reduced \ x, a matching of H - V(x)
  bool residual_certified = false;
};

PeelResult peel_step(const LabelledHypergraph& h, const Matching& m, EdgeId e,
                     const EngineOptions& options = {});

enum class SpanningKind { full_rank, deficient };

struct PeelRecord {
  EdgeId witness;
  std::vector<EdgeId> x;
  std::vector<Vertex> removed;
  std::size_t k;
};

struct SpanningMatchingResult {
  std::vector<Vertex> u;  // ascending
  Matching matching;      // independent matching of H - U
  std::size_t a = 0;      // sum of the peeled k
  SpanningKind kind = SpanningKind::deficient;
  std::size_t rank = 0;          // matroid rank d
  std::size_t initial_size = 0;  // size of the first maximal matching
  std::size_t max_edge_size = 0;
  bool certified = false;  // every maximality claim was certified exactly
  bool degraded = false;   // exact mode fell back to heuristic mode
  std::size_t augmentations = 0;
  std::vector<PeelRecord> peels;

  // Deficiency of a deficient result: d - |matching|.
  std::size_t lemma_k() const { return rank - matching.size(); }
  // |u| <= (2r-1) * a.
  bool within_peel_budget() const;
  // |u| <= (2r-1)(k-1) with k = d - |matching|, k >= 1 (deficient only).
  bool within_lemma_budget() const;
  // |matching| == initial_size - a, which the induction asserts.
  bool bookkeeping_consistent() const { return matching.size() + a == initial_size; }
};

// Throws std::invalid_argument when the matroid has rank 0.
SpanningMatchingResult spanning_matching(const LabelledHypergraph& h, const EngineOptions& options = {});

struct BasisMatchingsResult {
  std::vector<Vertex> u;
  std::vector<Matching> matchings;  // m matchings of H - U, edge ids of h
  SpanningMatchingResult lifted;    // the run on the m-fold lifted hypergraph
};

// The exact-mode edge cap is scaled by m for the lifted hypergraph.
BasisMatchingsResult disjoint_basis_matchings(const LabelledHypergraph& h, std::size_t m,
                                              const EngineOptions& options = {});

// Maximum-size independent matching by exhaustive search; lexicographically
// smallest id set among the optima. Throws ResourceError above 20 edges.
Matching bf_best_independent_matching(const LabelledHypergraph& h);

}  // namespace zsm

#endif  // ZSM_MATCHING_ENGINE_H_
