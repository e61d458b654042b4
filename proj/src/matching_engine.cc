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

#include "zsm/matching_engine.h"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

#include "zsm/errors.h"

namespace zsm {
namespace {

std::string edge_name(EdgeId e) { return "edge " + std::to_string(to_index(e)); }

std::vector<bool> vertex_mask(const LabelledHypergraph& h, std::span<const EdgeId> m) {
  std::vector<bool> used(h.vertex_universe(), false);
  for (EdgeId e : m) {
    for (Vertex v : h.endpoints(e)) used[to_index(v)] = true;
  }
  return used;
}

bool disjoint_from(const LabelledHypergraph& h, EdgeId e, const std::vector<bool>& used) {
  for (Vertex v : h.endpoints(e)) {
    if (used[to_index(v)]) return false;
  }
  return true;
}

bool edges_disjoint(const LabelledHypergraph& h, EdgeId a, EdgeId b) {
  const auto x = h.endpoints(a);
  const auto y = h.endpoints(b);
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

std::unique_ptr<IndependenceAccumulator> accumulate(const LabelledHypergraph& h, std::span<const EdgeId> m) {
  auto acc = h.matroid().accumulator();
  for (EdgeId e : m) acc->add(h.label(e));
  return acc;
}

Matching sorted(Matching m) {
  std::sort(m.begin(), m.end());
  return m;
}

Matching without(const Matching& m, std::span<const EdgeId> drop) {
  Matching out;
  for (EdgeId e : m) {
    if (std::find(drop.begin(), drop.end(), e) == drop.end()) out.push_back(e);
  }
  return out;
}

void require_independent_matching(const LabelledHypergraph& h, const Matching& m) {
  if (!is_independent_matching(h, m)) throw std::invalid_argument("not an independent matching");
}

void require_exact_size(const LabelledHypergraph& h, const EngineOptions& options) {
  if (h.edges().size() > options.exact_edge_cap) {
    throw ResourceError("exact mode: " + std::to_string(h.edges().size()) + " edges exceed the cap of " +
                        std::to_string(options.exact_edge_cap));
  }
}

// Depth-first enumeration of independent matchings drawn from `candidates`
// (ascending ids), in lexicographic order of the id sequences.
class MatchingSearch {
 public:
  MatchingSearch(const LabelledHypergraph& h, std::vector<EdgeId> candidates, std::uint64_t cap)
      : h_(h), candidates_(std::move(candidates)), cap_(cap), used_(h.vertex_universe(), false) {}

  // visit is called on every matching of size in [min_size, max_size].
  // Returns true when visit asked to stop.
  bool run(std::size_t min_size, std::size_t max_size, const std::function<bool(const Matching&)>& visit) {
    min_size_ = min_size;
    max_size_ = max_size;
    visit_ = &visit;
    current_.clear();
    return descend(0, h_.matroid().accumulator());
  }

 private:
  bool descend(std::size_t start, std::unique_ptr<IndependenceAccumulator> acc) {
    if (++examined_ > cap_) {
      throw ResourceError("exact mode: examined more than " + std::to_string(cap_) + " matchings");
    }
    if (current_.size() >= min_size_ && (*visit_)(current_)) return true;
    if (current_.size() == max_size_) return false;
    for (std::size_t i = start; i < candidates_.size(); ++i) {
      const EdgeId e = candidates_[i];
      if (!disjoint_from(h_, e, used_) || acc->spans(h_.label(e))) continue;
      auto next = acc->clone();
      next->add(h_.label(e));
      for (Vertex v : h_.endpoints(e)) used_[to_index(v)] = true;
      current_.push_back(e);
      const bool stop = descend(i + 1, std::move(next));
      current_.pop_back();
      for (Vertex v : h_.endpoints(e)) used_[to_index(v)] = false;
      if (stop) return true;
    }
    return false;
  }

  const LabelledHypergraph& h_;
  std::vector<EdgeId> candidates_;
  std::uint64_t cap_;
  std::uint64_t examined_ = 0;
  std::vector<bool> used_;
  Matching current_;
  std::size_t min_size_ = 0;
  std::size_t max_size_ = 0;
  const std::function<bool(const Matching&)>* visit_ = nullptr;
};

// Greedy extension followed by single-swap augmentation: look for
// M - g + f with the same span that some edge extends. Repeats until neither
// applies.
Matching heuristic_maximal(const LabelledHypergraph& h, Matching m, std::size_t* augmentations) {
  const auto all = h.all_labels();
  const std::size_t start_size = m.size();
  while (true) {
    m = greedy_extend(h, std::move(m));
    if (h.matroid().same_span(h.labels(m), all)) break;
    const auto span_acc = accumulate(h, m);
    bool improved = false;
    for (std::size_t gi = 0; gi < m.size() && !improved; ++gi) {
      const EdgeId g = m[gi];
      Matching rest = m;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(gi));
      const auto used = vertex_mask(h, rest);
      const auto rest_acc = accumulate(h, rest);
      std::vector<EdgeId> blocked;
      for (EdgeId x : h.edges()) {
        if (!edges_disjoint(h, x, g) && disjoint_from(h, x, used) && !span_acc->spans(h.label(x))) {
          blocked.push_back(x);
        }
      }
      if (blocked.empty()) continue;
      for (EdgeId f : h.edges()) {
        if (f == g || !disjoint_from(h, f, used)) continue;
        if (!span_acc->spans(h.label(f)) || rest_acc->spans(h.label(f))) continue;
        auto hit = std::find_if(blocked.begin(), blocked.end(), [&](EdgeId x) { return edges_disjoint(h, f, x); });
        if (hit == blocked.end()) continue;
        rest.push_back(f);
        rest.push_back(*hit);
        m = sorted(std::move(rest));
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (augmentations && m.size() > start_size) *augmentations += m.size() - start_size;
  return m;
}

// Lowest-id edge whose label lies outside span(labels(m)).
std::optional<EdgeId> span_witness(const LabelledHypergraph& h, const Matching& m) {
  const auto acc = accumulate(h, m);
  for (EdgeId e : h.edges()) {
    if (!acc->spans(h.label(e))) return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<EdgeId> extend_matching(const LabelledHypergraph& h, const Matching& m) {
  const auto used = vertex_mask(h, m);
  const auto acc = accumulate(h, m);
  for (EdgeId e : h.edges()) {
    if (disjoint_from(h, e, used) && !acc->spans(h.label(e))) return e;
  }
  return std::nullopt;
}

Matching greedy_extend(const LabelledHypergraph& h, Matching m) {
  auto used = vertex_mask(h, m);
  auto acc = accumulate(h, m);
  // One ascending pass suffices: an edge rejected earlier stays rejected.
  for (EdgeId e : h.edges()) {
    if (!disjoint_from(h, e, used) || acc->spans(h.label(e))) continue;
    acc->add(h.label(e));
    for (Vertex v : h.endpoints(e)) used[to_index(v)] = true;
    m.push_back(e);
  }
  return sorted(std::move(m));
}

void for_each_same_span_matching(const LabelledHypergraph& h, const Matching& reference,
                                 const EngineOptions& options,
                                 const std::function<bool(const Matching&)>& visit) {
  const auto acc = accumulate(h, reference);
  std::vector<EdgeId> candidates;
  for (EdgeId e : h.edges()) {
    if (acc->spans(h.label(e))) candidates.push_back(e);
  }
  // An independent set inside span(S) of size dim(S) spans S.
  const std::size_t dim = reference.size();
  MatchingSearch search(h, std::move(candidates), options.enumeration_cap);
  search.run(dim, dim, visit);
}

std::optional<ExtendableMatching> find_extendable_same_span(const LabelledHypergraph& h,
                                                            const Matching& reference,
                                                            const EngineOptions& options) {
  require_exact_size(h, options);
  std::optional<ExtendableMatching> found;
  for_each_same_span_matching(h, reference, options, [&](const Matching& candidate) {
    if (auto e = extend_matching(h, candidate)) {
      found = ExtendableMatching{candidate, *e};
      return true;
    }
    return false;
  });
  return found;
}

MaximalMatching find_maximal_independent_matching(const LabelledHypergraph& h, const EngineOptions& options) {
  if (options.mode == Mode::heuristic) {
    Matching m = heuristic_maximal(h, {}, nullptr);
    // Spanning every label leaves no room for a same-span extension.
    const bool spans_all = h.matroid().same_span(h.labels(m), h.all_labels());
    return {std::move(m), spans_all};
  }
  require_exact_size(h, options);
  Matching m = greedy_extend(h, {});
  // Each round strictly grows the span, so this terminates within rank rounds.
  while (auto found = find_extendable_same_span(h, m, options)) {
    Matching grown = found->matching;
    grown.push_back(found->extender);
    m = greedy_extend(h, sorted(std::move(grown)));
  }
  return {std::move(m), true};
}

ExchangeResult exchange_reduce(const LabelledHypergraph& h, const Matching& m, EdgeId e,
                               const EngineOptions& options) {
  require_independent_matching(h, m);
  if (!h.has_edge(e)) throw std::invalid_argument(edge_name(e) + " is not in the hypergraph");
  if (accumulate(h, m)->spans(h.label(e))) {
    throw std::invalid_argument("label of " + edge_name(e) + " lies in the span of the matching");
  }
  const bool exact = options.mode == Mode::exact;
  if (exact) {
    require_exact_size(h, options);
    if (find_extendable_same_span(h, m, options)) throw std::invalid_argument("matching is not maximal");
  } else if (extend_matching(h, m)) {
    throw std::invalid_argument("matching is not inclusion-wise maximal");
  }

  ExchangeResult result;
  Matching current = sorted(m);
  result.meet_sizes.push_back(meets(h, e, current).size());
  bool fixed_point_checked = false;
  while (true) {
    const auto meet = meets(h, e, current);
    if (meet.empty()) {
      if (exact) throw InternalError("exchange: e misses a maximal matching");
      result.matching = current;
      result.extender = e;
      return result;
    }
    std::vector<EdgeId> x = meet;
    x.push_back(e);
    const auto sub = h.delete_vertices(covered_vertices(h, x));
    const Matching rest = without(current, meet);

    std::optional<ExtendableMatching> step;
    if (exact) {
      step = find_extendable_same_span(sub, rest, options);
    } else if (auto star = extend_matching(sub, rest)) {
      step = ExtendableMatching{rest, *star};
    }

    if (!step) {
      if (!exact || fixed_point_checked) break;
      // The loop stalls on some non-minimisers; finish on the first minimiser.
      std::size_t best = meet.size();
      Matching best_matching;
      for_each_same_span_matching(h, current, options, [&](const Matching& candidate) {
        const std::size_t size = meets(h, e, candidate).size();
        if (size < best) {
          best = size;
          best_matching = candidate;
        }
        return false;
      });
      fixed_point_checked = true;
      if (best < meet.size()) {
        current = best_matching;
        result.minimized_by_enumeration = true;
        result.meet_sizes.push_back(best);
      }
      continue;
    }
    if (exact && fixed_point_checked && result.minimized_by_enumeration) {
      throw InternalError("exchange step applies to a minimiser of |e ⊓ M|");
    }

    Matching joined = step->matching;  // M'' = M' ∪ (M ∩ X)
    joined.insert(joined.end(), meet.begin(), meet.end());
    std::optional<EdgeId> out;
    for (EdgeId candidate : meet) {
      Matching trial = without(joined, std::span<const EdgeId>(&candidate, 1));
      trial.push_back(step->extender);
      if (h.matroid().is_independent(h.labels(trial))) {
        out = candidate;
        break;
      }
    }
    if (!out) {
      if (exact) throw InternalError("exchange: extender outside the span of a maximal matching");
      result.matching = sorted(std::move(joined));
      result.extender = step->extender;
      return result;
    }
    Matching next = without(joined, std::span<const EdgeId>(&*out, 1));
    next.push_back(step->extender);
    current = sorted(std::move(next));
    const std::size_t size = meets(h, e, current).size();
    if (size + 1 != result.meet_sizes.back()) throw InternalError("exchange step did not reduce |e ⊓ M| by one");
    result.meet_sizes.push_back(size);
  }
  result.matching = std::move(current);
  return result;
}

namespace {

struct PeelOrAugment {
  std::optional<PeelResult> peel;
  Matching augmented;
};

PeelOrAugment peel_or_augment(const LabelledHypergraph& h, const Matching& m, EdgeId e,
                              const EngineOptions& options) {
  auto reduced = exchange_reduce(h, m, e, options);
  if (reduced.extender) {
    Matching grown = reduced.matching;
    grown.push_back(*reduced.extender);
    return {std::nullopt, sorted(std::move(grown))};
  }
  PeelResult peel;
  const auto meet = meets(h, e, reduced.matching);
  if (meet.empty()) throw InternalError("peel: empty e ⊓ M");
  peel.x = meet;
  peel.x.push_back(e);
  std::sort(peel.x.begin(), peel.x.end());
  peel.k = meet.size();
  peel.residual = without(reduced.matching, meet);
  peel.reduced = std::move(reduced.matching);
  // Exact-mode exchange stops only when no same-span matching of H - V(X)
  // is extendable, which is the certificate.
  peel.residual_certified = options.mode == Mode::exact;
  return {std::move(peel), {}};
}

}  // namespace

PeelResult peel_step(const LabelledHypergraph& h, const Matching& m, EdgeId e, const EngineOptions& options) {
  auto outcome = peel_or_augment(h, m, e, options);
  if (!outcome.peel) throw std::invalid_argument("matching is not maximal: an exchange exposed an extension");
  return std::move(*outcome.peel);
}

bool SpanningMatchingResult::within_peel_budget() const { return u.size() <= (2 * max_edge_size - 1) * a; }

bool SpanningMatchingResult::within_lemma_budget() const {
  if (kind == SpanningKind::full_rank) return u.empty();
  const std::size_t k = lemma_k();
  return k >= 1 && u.size() <= (2 * max_edge_size - 1) * (k - 1);
}

SpanningMatchingResult spanning_matching(const LabelledHypergraph& h, const EngineOptions& options) {
  SpanningMatchingResult result;
  result.rank = h.matroid().rank();
  if (result.rank == 0) throw std::invalid_argument("spanning_matching needs a matroid of rank at least 1");
  result.max_edge_size = h.max_edge_size();

  EngineOptions opts = options;
  LabelledHypergraph current = h;
  Matching m;
  if (opts.mode == Mode::exact) {
    try {
      m = find_maximal_independent_matching(current, opts).matching;
    } catch (const ResourceError&) {
      opts.mode = Mode::heuristic;
      result.degraded = true;
    }
  }
  if (opts.mode == Mode::heuristic) m = heuristic_maximal(current, {}, nullptr);
  result.initial_size = m.size();

  while (auto witness = span_witness(current, m)) {
    PeelOrAugment outcome;
    try {
      outcome = peel_or_augment(current, m, *witness, opts);
    } catch (const ResourceError&) {
      // m is certified maximal here, so it meets the heuristic precondition.
      opts.mode = Mode::heuristic;
      result.degraded = true;
      outcome = peel_or_augment(current, m, *witness, opts);
    }
    if (!outcome.peel) {
      m = heuristic_maximal(current, std::move(outcome.augmented), nullptr);
      ++result.augmentations;
      continue;
    }
    const auto removed = covered_vertices(current, outcome.peel->x);
    result.peels.push_back({*witness, outcome.peel->x, removed, outcome.peel->k});
    result.u.insert(result.u.end(), removed.begin(), removed.end());
    result.a += outcome.peel->k;
    current = current.delete_vertices(removed);
    m = std::move(outcome.peel->residual);
    if (opts.mode == Mode::heuristic) m = heuristic_maximal(current, std::move(m), &result.augmentations);
  }

  std::sort(result.u.begin(), result.u.end());
  if (m.size() == result.rank) {
    // A basis-sized matching of H - U is one of H as well.
    result.kind = SpanningKind::full_rank;
    result.u.clear();
    result.a = 0;
  } else {
    result.kind = SpanningKind::deficient;
  }
  result.matching = std::move(m);
  result.certified = opts.mode == Mode::exact && !result.degraded;
  return result;
}

BasisMatchingsResult disjoint_basis_matchings(const LabelledHypergraph& h, std::size_t m,
                                              const EngineOptions& options) {
  if (m < 1) throw std::invalid_argument("disjoint_basis_matchings needs m >= 1");
  std::vector<std::shared_ptr<const Matroid>> copies(m, h.matroid_ptr());
  auto lifted_matroid = direct_sum(std::move(copies));

  const auto base_edges = h.edges();
  std::vector<Hyperedge> lifted_edges;
  lifted_edges.reserve(base_edges.size() * m);
  for (std::size_t copy = 0; copy < m; ++copy) {
    for (EdgeId e : base_edges) {
      const auto ends = h.endpoints(e);
      lifted_edges.push_back({{ends.begin(), ends.end()}, lifted_matroid->lift(copy, h.label(e))});
    }
  }
  LabelledHypergraph lifted(h.vertex_universe(), std::move(lifted_edges), lifted_matroid);
  std::vector<Vertex> inactive;
  for (Vertex v : lifted.vertices()) {
    if (!h.has_vertex(v)) inactive.push_back(v);
  }
  lifted = lifted.delete_vertices(inactive);

  EngineOptions lifted_options = options;
  lifted_options.exact_edge_cap = options.exact_edge_cap * m;

  BasisMatchingsResult result;
  result.lifted = spanning_matching(lifted, lifted_options);
  result.u = result.lifted.u;
  result.matchings.assign(m, {});
  for (EdgeId e : result.lifted.matching) {
    const std::size_t copy = to_index(e) / base_edges.size();
    result.matchings[copy].push_back(base_edges[to_index(e) % base_edges.size()]);
  }
  for (auto& mi : result.matchings) std::sort(mi.begin(), mi.end());
  return result;
}

Matching bf_best_independent_matching(const LabelledHypergraph& h) {
  if (h.edges().size() > 20) throw ResourceError("bf_best_independent_matching: more than 20 edges");
  std::vector<EdgeId> all(h.edges().begin(), h.edges().end());
  MatchingSearch search(h, std::move(all), UINT64_MAX);
  Matching best;
  search.run(0, h.matroid().rank(), [&](const Matching& candidate) {
    // Lexicographic visiting order: the first optimum seen is the smallest.
    if (candidate.size() > best.size()) best = candidate;
    return false;
  });
  return best;
}

}  // namespace zsm
