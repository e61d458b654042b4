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

#include "zsm/stress.h"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <exception>
#include <random>
#include <sstream>

#include "zsm/gf_algebra.h"
#include "zsm/hypergraph.h"
#include "zsm/instance_io.h"
#include "zsm/random_instances.h"
#include "zsm/zerosum.h"

namespace zsm {
namespace {

constexpr std::array<std::string_view, 5> kSuiteNames = {"haxell", "lemma31", "lemma32", "lemma33", "fprobe"};

// Collects check failures for one trial.
class Checks {
 public:
  void expect(bool ok, std::string what) {
    if (!ok) failures_.push_back(std::move(what));
  }
  std::vector<std::string> take() { return std::move(failures_); }

 private:
  std::vector<std::string> failures_;
};

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }
std::int64_t as_int(bool v) { return v ? 1 : 0; }

bool vertex_disjoint(const LabelledHypergraph& h, std::span<const Matching> ms) {
  std::vector<bool> seen(h.vertex_universe(), false);
  for (const auto& m : ms) {
    for (Vertex v : covered_vertices(h, m)) {
      if (seen[to_index(v)]) return false;
      seen[to_index(v)] = true;
    }
  }
  return true;
}

// Matching labels form a basis of the span of every active edge label.
bool spans_all_labels(const LabelledHypergraph& h, const Matching& m) {
  const auto labels = h.labels(m);
  return h.matroid().is_independent(labels) && h.matroid().same_span(labels, h.all_labels());
}

LinearEnsemble linear_ensemble(const StressConfig& config) {
  LinearEnsemble ensemble;
  ensemble.p = config.p;
  ensemble.max_dimension = config.d;
  return ensemble;
}

std::vector<std::int64_t> lemma32_trial(const StressConfig& config, std::mt19937_64& rng, Checks& checks,
                                        std::string& replay) {
  const auto h = random_linear_hypergraph(rng, linear_ensemble(config));
  replay = render_hypergraph(h);
  const auto result = spanning_matching(h, config.engine);
  const auto rest = h.delete_vertices(result.u);
  const bool full = result.kind == SpanningKind::full_rank;

  checks.expect(result.rank == h.matroid().rank(), "reported rank differs from the matroid rank");
  checks.expect(is_independent_matching(rest, result.matching), "result is not an independent matching of H - U");
  checks.expect(spans_all_labels(rest, result.matching), "matching labels are not a basis of span(E(H - U))");
  std::size_t budget = 0;
  if (full) {
    checks.expect(result.matching.size() == result.rank && result.u.empty(), "full-rank result is not full rank");
  } else {
    checks.expect(result.matching.size() < result.rank, "deficient result has full rank");
    budget = (2 * result.max_edge_size - 1) * (result.lemma_k() - 1);
    checks.expect(result.within_peel_budget(), "|U| exceeds (2r-1) times the peeled k");
    if (result.bookkeeping_consistent()) {
      checks.expect(result.within_lemma_budget(), "|U| exceeds (2r-1)(k-1)");
    } else {
      checks.expect(config.engine.mode == Mode::heuristic, "peel bookkeeping broken in exact mode");
    }
  }
  return {as_int(h.vertices().size()), as_int(h.edges().size()), as_int(result.rank),
          as_int(result.max_edge_size), as_int(full), as_int(result.matching.size()),
          as_int(result.u.size()), as_int(budget), as_int(result.certified), as_int(result.degraded)};
}

std::vector<std::int64_t> lemma31_trial(const StressConfig& config, std::mt19937_64& rng, Checks& checks,
                                        std::string& replay) {
  constexpr int kDraws = 1000;
  for (int draw = 0; draw < kDraws; ++draw) {
    const auto h = random_linear_hypergraph(rng, linear_ensemble(config));
    const auto start = find_maximal_independent_matching(h, config.engine).matching;
    auto acc = h.matroid().accumulator();
    for (EdgeId f : start) acc->add(h.label(f));
    std::optional<EdgeId> witness;
    for (EdgeId f : h.edges()) {
      if (!acc->spans(h.label(f))) {
        witness = f;
        break;
      }
    }
    if (!witness) continue;
    replay = render_hypergraph(h);

    const EdgeId e = *witness;
    const auto reduced = exchange_reduce(h, start, e, config.engine);
    const std::size_t final_meet = meets(h, e, reduced.matching).size();
    if (reduced.extender) {
      // Heuristic maximality can be refuted by the exchange itself.
      checks.expect(config.engine.mode == Mode::heuristic, "exchange exposed an extension of a maximal matching");
      return {as_int(h.edges().size()), as_int(h.matroid().rank()), 1, as_int(reduced.meet_sizes.front()),
              as_int(final_meet), as_int(final_meet), as_int(reduced.meet_sizes.size() - 1), 0, 0, 0, 0};
    }
    checks.expect(is_independent_matching(h, reduced.matching), "exchange output is not an independent matching");
    checks.expect(h.matroid().same_span(h.labels(reduced.matching), h.labels(start)),
                  "exchange changed the label span");
    checks.expect(reduced.meet_sizes.back() == final_meet, "meet trace does not end at the output");
    for (std::size_t i = 1; i < reduced.meet_sizes.size(); ++i) {
      const bool jump = reduced.minimized_by_enumeration && i + 1 == reduced.meet_sizes.size();
      checks.expect(jump ? reduced.meet_sizes[i] < reduced.meet_sizes[i - 1]
                         : reduced.meet_sizes[i] + 1 == reduced.meet_sizes[i - 1],
                    "an exchange did not lower |e ⊓ M| by one");
    }

    std::size_t min_meet = final_meet;
    if (config.engine.mode == Mode::exact) {
      for_each_same_span_matching(h, start, config.engine, [&](const Matching& other) {
        min_meet = std::min(min_meet, meets(h, e, other).size());
        return false;
      });
      checks.expect(min_meet == final_meet, "exchange did not reach the minimum of |e ⊓ M|");
    }

    const auto peel = peel_step(h, start, e, config.engine);
    const auto removed = covered_vertices(h, peel.x);
    const auto rest = h.delete_vertices(removed);
    const std::size_t r = h.max_edge_size();
    checks.expect(peel.x.size() == peel.k + 1, "|X| != k + 1");
    checks.expect(std::binary_search(peel.x.begin(), peel.x.end(), e), "X does not contain e");
    checks.expect(edge_set_connected(h, peel.x), "X is not connected");
    checks.expect(removed.size() <= (r - 1) * peel.k + r, "|V(X)| exceeds (r-1)k + r");
    checks.expect(peel.residual.size() + peel.k == start.size(), "residual size is not |M| - k");
    checks.expect(is_independent_matching(rest, peel.residual), "residual is not a matching of H - V(X)");
    bool residual_maximal = false;
    if (config.engine.mode == Mode::exact) {
      residual_maximal = !find_extendable_same_span(rest, peel.residual, config.engine);
      checks.expect(peel.residual_certified && residual_maximal, "residual is not maximal in H - V(X)");
    }
    return {as_int(h.edges().size()), as_int(h.matroid().rank()), 1, as_int(reduced.meet_sizes.front()),
            as_int(final_meet), as_int(min_meet), as_int(reduced.meet_sizes.size() - 1),
            as_int(reduced.minimized_by_enumeration), as_int(peel.x.size()), as_int(removed.size()),
            as_int(residual_maximal)};
  }
  return {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
}

std::vector<std::int64_t> lemma33_trial(const StressConfig& config, std::mt19937_64& rng, Checks& checks,
                                        std::string& replay) {
  const auto h = random_linear_hypergraph(rng, linear_ensemble(config));
  replay = render_hypergraph(h);
  const auto result = disjoint_basis_matchings(h, config.copies, config.engine);
  const auto rest = h.delete_vertices(result.u);
  const std::size_t d = h.matroid().rank();
  const std::size_t r = h.max_edge_size();
  const std::size_t budget = (2 * r - 1) * (d * config.copies - 1);

  checks.expect(result.matchings.size() == config.copies, "wrong number of matchings");
  checks.expect(vertex_disjoint(h, result.matchings), "matchings share a vertex");
  for (const auto& m : result.matchings) {
    checks.expect(is_independent_matching(rest, m), "a matching is not an independent matching of H - U");
    checks.expect(spans_all_labels(rest, m), "a matching is not a basis of span(E(H - U))");
  }
  checks.expect(result.u.size() <= budget, "|U| exceeds (2r-1)(dm-1)");
  const std::size_t size = result.matchings.empty() ? 0 : result.matchings.front().size();
  return {as_int(h.vertices().size()), as_int(h.edges().size()), as_int(d), as_int(config.copies),
          as_int(result.u.size()), as_int(budget), as_int(size), as_int(result.lifted.degraded)};
}

std::vector<std::int64_t> haxell_trial(const StressConfig& config, std::mt19937_64& rng, Checks& checks,
                                       std::string& replay) {
  const auto h = random_colored_hypergraph(rng);
  replay = render_hypergraph(h);
  const auto result = spanning_matching(h, config.engine);
  const auto rest = h.delete_vertices(result.u);
  const bool full = result.kind == SpanningKind::full_rank;
  const bool oracle_full = bf_best_independent_matching(h).size() == result.rank;

  checks.expect(full == oracle_full, "full-rank verdict disagrees with the rainbow oracle");
  checks.expect(is_independent_matching(rest, result.matching), "result is not a rainbow matching of H - U");
  checks.expect(spans_all_labels(rest, result.matching), "H - U has a color the matching misses");
  std::size_t budget = 0;
  if (!full) {
    budget = (2 * result.max_edge_size - 1) * (result.lemma_k() - 1);
    checks.expect(result.within_lemma_budget(), "|U| exceeds (2r-1)(k-1)");
  }
  return {as_int(h.vertices().size()), as_int(h.edges().size()), as_int(result.rank), as_int(full),
          as_int(oracle_full), as_int(result.matching.size()), as_int(result.u.size()), as_int(budget)};
}

std::size_t ceil_log2(std::size_t d) { return d <= 1 ? 0 : std::bit_width(d - 1); }

std::vector<std::int64_t> fprobe_trial(const StressConfig& config, std::uint64_t seed, Checks& checks) {
  const FieldSpec spec(config.p, config.d);
  const auto probe = probe_f(spec, config.trials, seed);
  const std::size_t p = config.p;
  const std::size_t bound = std::max((p - 1) * ceil_log2(config.d) + (p - 2), p - 1);
  checks.expect(probe.value <= bound, "probe exceeds max((p-1)ceil(log2 d) + p - 2, p - 1)");
  return {as_int(p), as_int(std::size_t{config.d}), as_int(probe.value), as_int(probe.exact), as_int(bound)};
}

}  // namespace

std::optional<StressSuite> parse_suite(std::string_view name) {
  for (std::size_t i = 0; i < kSuiteNames.size(); ++i) {
    if (kSuiteNames[i] == name) return static_cast<StressSuite>(i);
  }
  return std::nullopt;
}

std::string_view suite_name(StressSuite suite) { return kSuiteNames.at(static_cast<std::size_t>(suite)); }

std::size_t StressReport::violation_count() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const TrialOutcome& t) { return !t.violations.empty(); }));
}

std::vector<std::string> stress_columns(StressSuite suite) {
  switch (suite) {
    case StressSuite::haxell:
      return {"vertices", "edges", "colors", "full_rank", "oracle_full_rank", "matching_size", "u_size", "u_budget"};
    case StressSuite::lemma31:
      return {"edges",    "rank",      "has_witness", "initial_meet", "final_meet",       "min_meet",
              "exchanges", "enumerated", "x_size",      "x_vertices",   "residual_maximal"};
    case StressSuite::lemma32:
      return {"vertices", "edges",  "rank",     "max_edge_size", "full_rank",
              "matching_size", "u_size", "u_budget", "certified",     "degraded"};
    case StressSuite::lemma33:
      return {"vertices", "edges", "rank", "copies", "u_size", "u_budget", "basis_size", "degraded"};
    case StressSuite::fprobe:
      return {"p", "d", "value", "exact", "bound"};
  }
  return {};
}

TrialOutcome run_trial(const StressConfig& config, std::size_t index) {
  TrialOutcome outcome;
  outcome.seed = config.seed + index;
  const auto started = std::chrono::steady_clock::now();
  std::mt19937_64 rng(outcome.seed);
  Checks checks;
  std::string replay;
  try {
    switch (config.suite) {
      case StressSuite::haxell:
        outcome.values = haxell_trial(config, rng, checks, replay);
        break;
      case StressSuite::lemma31:
        outcome.values = lemma31_trial(config, rng, checks, replay);
        break;
      case StressSuite::lemma32:
        outcome.values = lemma32_trial(config, rng, checks, replay);
        break;
      case StressSuite::lemma33:
        outcome.values = lemma33_trial(config, rng, checks, replay);
        break;
      case StressSuite::fprobe:
        outcome.values = fprobe_trial(config, outcome.seed, checks);
        break;
    }
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  outcome.violations = checks.take();
  if (outcome.values.empty()) outcome.values.assign(stress_columns(config.suite).size(), 0);
  if (!outcome.violations.empty()) outcome.replay = std::move(replay);
  outcome.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started).count();
  return outcome;
}

namespace {

std::size_t trial_count(const StressConfig& config) {
  return config.suite == StressSuite::fprobe ? 1 : config.trials;
}

}  // namespace

StressReport run_stress_serial(const StressConfig& config) {
  StressReport report{stress_columns(config.suite), {}};
  for (std::size_t i = 0; i < trial_count(config); ++i) report.trials.push_back(run_trial(config, i));
  return report;
}

StressReport run_stress_parallel(const StressConfig& config) {
  StressReport report{stress_columns(config.suite), {}};
  const auto count = static_cast<std::int64_t>(trial_count(config));
  report.trials.resize(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    report.trials[static_cast<std::size_t>(i)] = run_trial(config, static_cast<std::size_t>(i));
  }
  return report;
}

std::string render_csv(const StressReport& report) {
  std::ostringstream out;
  out << "seed";
  for (const auto& c : report.columns) out << ',' << c;
  out << ",violation,wall_time_ms\n";
  for (const auto& t : report.trials) {
    out << t.seed;
    for (auto v : t.values) out << ',' << v;
    out << ',' << (t.violations.empty() ? 0 : 1) << ',' << t.wall_time_ms << '\n';
  }
  return out.str();
}

}  // namespace zsm
