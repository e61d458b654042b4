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

#ifndef ZSM_ZEROSUM_H_
#define ZSM_ZEROSUM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zsm/gf_algebra.h"
#include "zsm/hypergraph.h"
#include "zsm/matching_engine.h"
#include "zsm/matroid.h"

namespace zsm {

// Complete digraph on {0, ..., n-1} with arc labels in Z_p^d.
class LabelledDigraph {
 public:
  // Every arc labelled 0.
  LabelledDigraph(FieldSpec spec, std::size_t n);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return n_; }
  // Throws std::out_of_range for u == v or an index >= n.
  const GroupVector& weight(std::size_t u, std::size_t v) const;
  void set_weight(std::size_t u, std::size_t v, GroupVector w);

  friend bool operator==(const LabelledDigraph&, const LabelledDigraph&) = default;

 private:
  std::size_t slot(std::size_t u, std::size_t v) const;

  FieldSpec spec_;
  std::size_t n_;
  std::vector<GroupVector> arcs_;  // row-major n*n; the diagonal stays zero
};

// A directed cycle v_0 -> v_1 -> ... -> v_{l-1} -> v_0 and its label sum.
struct CycleWitness {
  std::vector<std::size_t> vertices;
  GroupVector sum;
};

// Ordered triple (x, y, z) of distinct vertices.
using Triple = std::array<std::uint32_t, 3>;

// All n(n-1)(n-2) ordered triples in lexicographic order.
std::vector<Triple> ordered_triples(std::size_t n);

// w(x,y) + w(y,z) - w(x,z) for each triple. The parallel kernel must agree
// with the serial reference element for element.
std::vector<GroupVector> triple_labels_serial(const LabelledDigraph& dg, std::span<const Triple> triples);
std::vector<GroupVector> triple_labels_parallel(const LabelledDigraph& dg, std::span<const Triple> triples);

GroupVector triple_label(const LabelledDigraph& dg, const Triple& t);

// 3-uniform multi-hypergraph with one edge per ordered triple. Edge i is
// triples[i]; its label is element i of a linear matroid holding the
// triple's vector.
struct TripleHypergraph {
  std::vector<Triple> triples;
  std::shared_ptr<const LinearMatroid> matroid;
  LabelledHypergraph hypergraph;

  const GroupVector& vector(EdgeId e) const { return matroid->vector(hypergraph.label(e)); }
};

// Throws std::invalid_argument when n < 3.
TripleHypergraph triple_hypergraph(const LabelledDigraph& dg);

struct BaseCycle {
  std::vector<Triple> triples;
  std::vector<std::size_t> cycle;  // x_1, z_1, ..., x_k, z_k
  GroupVector a;                   // label sum along the cycle
};

// Checks the telescoping identity a = sum over arcs (v1,v2) of the cycle of
// gamma(y_1, v1, v2), and a ∈ span when one is supplied; throws
// InternalError on failure. Throws std::invalid_argument on an empty or
// overlapping triple list.
BaseCycle base_cycle(const LabelledDigraph& dg, std::span<const Triple> triples, const SpanBasis* span = nullptr);

// A subset S of indices with sum_{i in S} labels[i] == target, or nullopt if
// target is not a sub-multiset sum. p = 2 uses a linear solve, other primes
// the subset-sum table.
std::optional<std::vector<std::size_t>> select_detours(FieldSpec spec, std::span<const GroupVector> labels,
                                                       const GroupVector& target,
                                                       std::uint64_t budget = kDefaultReachBudget);

// Starting m of the escalation schedule.
std::size_t default_m_start(FieldSpec spec);

struct ZeroSumOptions {
  std::optional<std::size_t> m_override;
  EngineOptions engine;
  std::uint64_t reach_budget = kDefaultReachBudget;
};

struct PipelineReport {
  explicit PipelineReport(FieldSpec spec) : witness{{}, GroupVector(spec)} {}

  CycleWitness witness;
  std::size_t m_used = 0;
  std::vector<std::size_t> m_attempted;
  std::vector<Vertex> u;
  std::size_t span_dimension = 0;
  bool digon_shortcut = false;
  std::optional<BaseCycle> base;
  std::vector<std::size_t> detours;  // indices into base->triples
};

class PipelineFailure : public std::runtime_error {
 public:
  PipelineFailure(const std::string& what, std::size_t largest_m)
      : std::runtime_error(what), largest_m_(largest_m) {}
  std::size_t largest_m() const { return largest_m_; }

 private:
  std::size_t largest_m_;
};

// Throws PipelineFailure when no m in the schedule yields a cycle.
PipelineReport find_zero_sum_cycle(const LabelledDigraph& dg, const ZeroSumOptions& options = {});

GroupVector cycle_sum(const LabelledDigraph& dg, std::span<const std::size_t> cycle);
// Throws std::invalid_argument on fewer than 2 vertices, a repeated vertex or
// an out-of-range vertex.
bool verify_cycle(const LabelledDigraph& dg, std::span<const std::size_t> cycle);

// First zero-sum cycle in canonical order: by smallest vertex, then by the
// lexicographic order of the remaining sequence (a prefix comes first).
// Throws ResourceError when n > 8.
std::optional<CycleWitness> bf_zero_sum_cycle(const LabelledDigraph& dg);

// (p-1)d vertices in d blocks of p-1; every arc into block j is labelled e_j.
LabelledDigraph lower_bound_witness(FieldSpec spec);

struct FProbeResult {
  std::size_t value = 0;
  bool exact = false;
};

// Smallest m such that every tested m-tuple of linear bases has an additive
// basis union. Exhaustive when p^d <= 81 and the tuples are few enough,
// otherwise `trials` random tuples per m.
FProbeResult probe_f(FieldSpec spec, std::size_t trials, std::uint64_t seed);

}  // namespace zsm

#endif  // ZSM_ZEROSUM_H_
