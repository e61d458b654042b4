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

#include "zsm/zerosum.h"

#include <algorithm>
#include <bit>
#include <sstream>

#include "zsm/errors.h"
#include "zsm/random_instances.h"

namespace zsm {

LabelledDigraph::LabelledDigraph(FieldSpec spec, std::size_t n)
    : spec_(spec), n_(n), arcs_(n * n, GroupVector(spec)) {}

std::size_t LabelledDigraph::slot(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_ || u == v) {
    throw std::out_of_range("no arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return u * n_ + v;
}

const GroupVector& LabelledDigraph::weight(std::size_t u, std::size_t v) const { return arcs_[slot(u, v)]; }

void LabelledDigraph::set_weight(std::size_t u, std::size_t v, GroupVector w) {
  if (!(w.spec() == spec_)) throw std::invalid_argument("arc label has the wrong field spec");
  arcs_[slot(u, v)] = std::move(w);
}

std::vector<Triple> ordered_triples(std::size_t n) {
  std::vector<Triple> out;
  if (n < 3) return out;
  out.reserve(n * (n - 1) * (n - 2));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (y == x) continue;
      for (std::uint32_t z = 0; z < n; ++z) {
        if (z != x && z != y) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

GroupVector triple_label(const LabelledDigraph& dg, const Triple& t) {
  GroupVector g = dg.weight(t[0], t[1]);
  g += dg.weight(t[1], t[2]);
  g -= dg.weight(t[0], t[2]);
  return g;
}

std::vector<GroupVector> triple_labels_serial(const LabelledDigraph& dg, std::span<const Triple> triples) {
  std::vector<GroupVector> out;
  out.reserve(triples.size());
  for (const auto& t : triples) out.push_back(triple_label(dg, t));
  return out;
}

std::vector<GroupVector> triple_labels_parallel(const LabelledDigraph& dg, std::span<const Triple> triples) {
  std::vector<GroupVector> out(triples.size(), GroupVector(dg.spec()));
  const auto count = static_cast<std::int64_t>(triples.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = triple_label(dg, triples[static_cast<std::size_t>(i)]);
  }
  return out;
}

TripleHypergraph triple_hypergraph(const LabelledDigraph& dg) {
  if (dg.size() < 3) throw std::invalid_argument("triple hypergraph needs at least 3 vertices");
  auto triples = ordered_triples(dg.size());
  auto matroid = std::make_shared<const LinearMatroid>(dg.spec(), triple_labels_parallel(dg, triples));
  std::vector<Hyperedge> edges;
  edges.reserve(triples.size());
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    edges.push_back({{make_id<Vertex>(t[0]), make_id<Vertex>(t[1]), make_id<Vertex>(t[2])}, make_id<ElementId>(i)});
  }
  LabelledHypergraph h(dg.size(), std::move(edges), matroid);
  return {std::move(triples), std::move(matroid), std::move(h)};
}

BaseCycle base_cycle(const LabelledDigraph& dg, std::span<const Triple> triples, const SpanBasis* span) {
  if (triples.empty()) throw std::invalid_argument("base cycle needs at least one matched triple");
  std::vector<bool> seen(dg.size(), false);
  for (const auto& t : triples) {
    for (std::uint32_t v : t) {
      if (v >= dg.size() || seen[v]) throw std::invalid_argument("matched triples must be vertex-disjoint");
      seen[v] = true;
    }
  }
  BaseCycle bc{{triples.begin(), triples.end()}, {}, GroupVector(dg.spec())};
  for (const auto& t : triples) {
    bc.cycle.push_back(t[0]);
    bc.cycle.push_back(t[2]);
  }
  bc.a = cycle_sum(dg, bc.cycle);

  // y_1 is off the cycle, so every (y_1, v1, v2) is a hyperedge.
  const std::size_t u = triples.front()[1];
  GroupVector telescoped(dg.spec());
  for (std::size_t i = 0; i < bc.cycle.size(); ++i) {
    const std::size_t v1 = bc.cycle[i];
    const std::size_t v2 = bc.cycle[(i + 1) % bc.cycle.size()];
    const Triple t{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v1), static_cast<std::uint32_t>(v2)};
    const GroupVector g = triple_label(dg, t);
    if (span && !span->contains(g)) throw InternalError("base cycle: telescoping term outside the span");
    telescoped += g;
  }
  if (!(telescoped == bc.a)) throw InternalError("base cycle: telescoping identity failed");
  if (span && !span->contains(bc.a)) throw InternalError("base cycle: label sum outside the span");
  return bc;
}

std::optional<std::vector<std::size_t>> select_detours(FieldSpec spec, std::span<const GroupVector> labels,
                                                       const GroupVector& target, std::uint64_t budget) {
  if (target.is_zero()) return std::vector<std::size_t>{};
  if (spec.p() == 2) {
    // In characteristic 2 subset sums are exactly the span.
    const auto coefficients = solve_representation(spec, labels, target);
    if (!coefficients) return std::nullopt;
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < coefficients->size(); ++i) {
      if ((*coefficients)[i] != 0) picked.push_back(i);
    }
    return picked;
  }
  return reachable_sums(spec, labels, budget).reconstruct(target);
}

std::size_t default_m_start(FieldSpec spec) {
  // f(2, d) = 1 because linear and additive bases coincide over Z_2.
  if (spec.p() == 2) return 1;
  const std::size_t p = spec.p();
  const auto log2d = static_cast<std::size_t>(std::bit_width(std::max<std::size_t>(spec.d(), 2) - 1));
  return std::max({std::size_t{1}, (p - 1) * log2d + (p - 2), p - 1});
}

GroupVector cycle_sum(const LabelledDigraph& dg, std::span<const std::size_t> cycle) {
  GroupVector sum(dg.spec());
  for (std::size_t i = 0; i < cycle.size(); ++i) sum += dg.weight(cycle[i], cycle[(i + 1) % cycle.size()]);
  return sum;
}

bool verify_cycle(const LabelledDigraph& dg, std::span<const std::size_t> cycle) {
  if (cycle.size() < 2) throw std::invalid_argument("a cycle needs at least 2 vertices");
  std::vector<bool> seen(dg.size(), false);
  for (std::size_t v : cycle) {
    if (v >= dg.size()) throw std::invalid_argument("cycle vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
  return cycle_sum(dg, cycle).is_zero();
}

namespace {

std::string describe_failure(std::size_t largest_m) {
  std::ostringstream msg;
  msg << "no zero-sum cycle found (largest m attempted: " << largest_m << ")";
  return msg.str();
}

std::optional<PipelineReport> attempt(const LabelledDigraph& dg, const TripleHypergraph& th, std::size_t m,
                                      const ZeroSumOptions& options) {
  const FieldSpec spec = dg.spec();
  // Every triple label vanishes: nothing to match, U stays empty.
  const auto lifted = th.matroid->rank() == 0 ? BasisMatchingsResult{}
                                              : disjoint_basis_matchings(th.hypergraph, m, options.engine);
  const auto rest = th.hypergraph.delete_vertices(lifted.u);
  SpanBasis span(spec);
  for (EdgeId e : rest.edges()) {
    span.insert(th.vector(e));
    if (span.dimension() == spec.d()) break;
  }

  PipelineReport report(spec);
  report.m_used = m;
  report.u = lifted.u;
  report.span_dimension = span.dimension();

  if (span.dimension() == 0) {
    // gamma(x,y,z) + gamma(x,z,y) = w(y,z) + w(z,y), and both gammas vanish.
    if (rest.vertices().size() < 3) return std::nullopt;
    const std::vector<std::size_t> digon{to_index(rest.vertices()[0]), to_index(rest.vertices()[1])};
    if (!verify_cycle(dg, digon)) throw InternalError("digon shortcut produced a nonzero cycle");
    report.digon_shortcut = true;
    report.witness = {digon, cycle_sum(dg, digon)};
    return report;
  }

  std::vector<EdgeId> matched;
  for (const auto& mi : lifted.matchings) {
    std::vector<GroupVector> labels;
    for (EdgeId e : mi) labels.push_back(th.vector(e));
    if (!(span_of(spec, labels) == span)) throw InternalError("basis matching does not span span(gamma(E(H-U)))");
    matched.insert(matched.end(), mi.begin(), mi.end());
  }
  std::sort(matched.begin(), matched.end());
  std::vector<Triple> triples;
  std::vector<GroupVector> labels;
  for (EdgeId e : matched) {
    triples.push_back(th.triples[to_index(e)]);
    labels.push_back(th.vector(e));
  }

  const bool additive = spec.p() == 2 ? span_of(spec, labels) == span
                                      : is_additive_basis(labels, span, options.reach_budget);
  if (!additive) return std::nullopt;

  BaseCycle bc = base_cycle(dg, triples, &span);
  auto detours = select_detours(spec, labels, vec_neg(bc.a), options.reach_budget);
  if (!detours) return std::nullopt;

  std::vector<bool> take(triples.size(), false);
  GroupVector expected = bc.a;
  for (std::size_t i : *detours) {
    take[i] = true;
    expected += labels[i];
  }
  std::vector<std::size_t> cycle;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    cycle.push_back(triples[i][0]);
    if (take[i]) cycle.push_back(triples[i][1]);
    cycle.push_back(triples[i][2]);
  }
  GroupVector sum = cycle_sum(dg, cycle);
  if (!(sum == expected)) throw InternalError("detour splice changed the sum by the wrong amount");
  if (!verify_cycle(dg, cycle)) throw InternalError("assembled cycle is not zero-sum");

  report.witness = {std::move(cycle), std::move(sum)};
  report.base = std::move(bc);
  report.detours = std::move(*detours);
  return report;
}

}  // namespace

PipelineReport find_zero_sum_cycle(const LabelledDigraph& dg, const ZeroSumOptions& options) {
  const std::size_t n = dg.size();
  if (n < 2) throw PipelineFailure("no zero-sum cycle found: fewer than 2 vertices", 0);
  if (n == 2) {
    const std::vector<std::size_t> digon{0, 1};
    if (!verify_cycle(dg, digon)) throw PipelineFailure("no zero-sum cycle found: the only cycle is a nonzero digon", 0);
    PipelineReport report(dg.spec());
    report.digon_shortcut = true;
    report.witness = {digon, cycle_sum(dg, digon)};
    return report;
  }

  std::vector<std::size_t> schedule;
  if (options.m_override) {
    if (*options.m_override < 1) throw std::invalid_argument("m must be at least 1");
    schedule.push_back(*options.m_override);
  } else {
    const std::size_t d = dg.spec().d();
    for (std::size_t m = default_m_start(dg.spec()); 5 * d * m <= n; ++m) schedule.push_back(m);
    // Below the guaranteed size, still try once; every output is verified.
    if (schedule.empty()) schedule.push_back(default_m_start(dg.spec()));
  }

  const auto th = triple_hypergraph(dg);
  std::vector<std::size_t> attempted;
  for (std::size_t m : schedule) {
    attempted.push_back(m);
    if (auto report = attempt(dg, th, m, options)) {
      report->m_attempted = attempted;
      return std::move(*report);
    }
  }
  throw PipelineFailure(describe_failure(attempted.back()), attempted.back());
}

std::optional<CycleWitness> bf_zero_sum_cycle(const LabelledDigraph& dg) {
  const std::size_t n = dg.size();
  if (n > 8) throw ResourceError("bf_zero_sum_cycle: more than 8 vertices");
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  std::optional<CycleWitness> found;

  // path[0] is the smallest vertex of the cycle; sum covers the open path.
  auto search = [&](auto&& self, const GroupVector& sum) -> bool {
    const std::size_t start = path.front();
    if (path.size() >= 2) {
      GroupVector closed = sum;
      closed += dg.weight(path.back(), start);
      if (closed.is_zero()) {
        found = CycleWitness{path, closed};
        return true;
      }
    }
    for (std::size_t v = start + 1; v < n; ++v) {
      if (on_path[v]) continue;
      GroupVector next = sum;
      next += dg.weight(path.back(), v);
      path.push_back(v);
      on_path[v] = true;
      const bool stop = self(self, next);
      on_path[v] = false;
      path.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    const bool stop = search(search, GroupVector(dg.spec()));
    on_path[s] = false;
    if (stop) return found;
  }
  return std::nullopt;
}

LabelledDigraph lower_bound_witness(FieldSpec spec) {
  const std::size_t block = spec.p() - 1;
  const std::size_t n = block * spec.d();
  LabelledDigraph dg(spec, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) dg.set_weight(u, v, GroupVector::unit(spec, v / block));
    }
  }
  return dg;
}

namespace {

constexpr std::uint64_t kSaturated = UINT64_MAX;

// |GL(d, p)| / d!, saturating.
std::uint64_t unordered_basis_count(FieldSpec spec) {
  const auto order = spec.group_order();
  if (!order) return kSaturated;
  unsigned __int128 count = 1;
  std::uint64_t power = 1;
  for (std::uint32_t i = 0; i < spec.d(); ++i) {
    count *= (*order - power);
    count /= (i + 1);  // exact: counts independent (i+1)-subsets
    if (count > kSaturated) return kSaturated;
    power *= spec.p();
  }
  return static_cast<std::uint64_t>(count);
}

// C(b + m - 1, m), saturating.
std::uint64_t multiset_count(std::uint64_t b, std::uint64_t m) {
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    c = c * (b + i - 1) / i;
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<std::vector<GroupVector>> enumerate_bases(FieldSpec spec) {
  std::vector<GroupVector> nonzero;
  for (std::uint64_t i = 1; i < *spec.group_order(); ++i) nonzero.push_back(GroupVector::from_index(spec, i));
  std::vector<std::vector<GroupVector>> bases;
  std::vector<GroupVector> chosen;
  auto grow = [&](auto&& self, std::size_t from, const SpanBasis& basis) -> void {
    if (chosen.size() == spec.d()) {
      bases.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < nonzero.size(); ++i) {
      SpanBasis next = basis;
      if (!next.insert(nonzero[i])) continue;
      chosen.push_back(nonzero[i]);
      self(self, i + 1, next);
      chosen.pop_back();
    }
  };
  grow(grow, 0, SpanBasis(spec));
  return bases;
}

std::vector<GroupVector> random_basis(FieldSpec spec, std::mt19937_64& rng) {
  while (true) {
    std::vector<GroupVector> rows;
    for (std::uint32_t i = 0; i < spec.d(); ++i) rows.push_back(random_vector(spec, rng));
    if (rank_of(spec, rows) == spec.d()) return rows;
  }
}

bool union_is_additive(FieldSpec spec, std::span<const GroupVector> vectors, std::uint64_t order) {
  return reachable_sums(spec, vectors).reachable_count() == order;
}

}  // namespace

FProbeResult probe_f(FieldSpec spec, std::size_t trials, std::uint64_t seed) {
  const auto order = spec.group_order();
  if (!order || *order > kDefaultReachBudget) throw ResourceError("probe_f: p^d exceeds the subset-sum budget");
  constexpr std::uint64_t kMaxBases = 100'000;
  constexpr std::uint64_t kMaxTuples = 2'000'000;
  const bool enumerable = *order <= 81 && unordered_basis_count(spec) <= kMaxBases;
  const auto bases = enumerable ? enumerate_bases(spec) : std::vector<std::vector<GroupVector>>{};
  std::mt19937_64 rng(seed);

  const std::size_t limit = 4 * spec.p() * (spec.d() + 1);
  for (std::size_t m = 1; m <= limit; ++m) {
    const bool exhaustive = enumerable && multiset_count(bases.size(), m) <= kMaxTuples;
    bool holds = true;
    std::vector<GroupVector> pool;
    if (exhaustive) {
      std::vector<std::size_t> pick(m, 0);
      while (holds) {
        pool.clear();
        for (std::size_t b : pick) pool.insert(pool.end(), bases[b].begin(), bases[b].end());
        holds = union_is_additive(spec, pool, *order);
        // Next nondecreasing index tuple.
        std::size_t i = m;
        while (i > 0 && pick[i - 1] + 1 == bases.size()) --i;
        if (i == 0) break;
        const std::size_t next = pick[i - 1] + 1;
        for (std::size_t j = i - 1; j < m; ++j) pick[j] = next;
      }
    } else {
      for (std::size_t t = 0; t < trials && holds; ++t) {
        pool.clear();
        for (std::size_t j = 0; j < m; ++j) {
          auto b = random_basis(spec, rng);
          pool.insert(pool.end(), b.begin(), b.end());
        }
        holds = union_is_additive(spec, pool, *order);
      }
    }
    // A failing tuple refutes m-1 outright, so the answer is exact whenever
    // the passing round was exhaustive.
    if (holds) return {m, exhaustive};
  }
  throw InternalError("probe_f: no m up to " + std::to_string(limit) + " passed");
}

}  // namespace zsm
