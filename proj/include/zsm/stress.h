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

#ifndef ZSM_STRESS_H_
#define ZSM_STRESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zsm/matching_engine.h"

namespace zsm {

// Randomized property suites over small instances.
//
//   haxell   free-matroid colored 3-uniform hypergraphs; the full-rank
//            verdict must match an exhaustive rainbow-matching search.
//   lemma31  exchange_reduce and peel_step on a maximal matching and an
//            edge outside its span.
//   lemma32  spanning_matching and its deletion budget.
//   lemma33  disjoint_basis_matchings with `copies` matchings.
//   fprobe   probe_f on Z_p^d. A single row; `trials` is the sample count
//            used when the probe cannot enumerate.
//
// Trial i draws its instance from seed + i, so rows do not depend on the
// order in which trials run.
enum class StressSuite { haxell, lemma31, lemma32, lemma33, fprobe };

std::optional<StressSuite> parse_suite(std::string_view name);
std::string_view suite_name(StressSuite suite);

struct StressConfig {
  StressSuite suite = StressSuite::lemma32;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::uint32_t p = 2;  // field of the linear matroids, or the probed field
  std::uint32_t d = 3;  // largest matroid rank, or the probed dimension
  std::size_t copies = 2;
  EngineOptions engine{.mode = Mode::exact};
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::vector<std::int64_t> values;     // one per suite column
  std::vector<std::string> violations;  // empty when every check passed
  std::string replay;                   // instance text, set on violation
  std::int64_t wall_time_ms = 0;

  // Ignores the wall time.
  bool same_result(const TrialOutcome& other) const {
    return seed == other.seed && values == other.values && violations == other.violations &&
           replay == other.replay;
  }
};

struct StressReport {
  std::vector<std::string> columns;
  std::vector<TrialOutcome> trials;  // in trial order

  std::size_t violation_count() const;
};

std::vector<std::string> stress_columns(StressSuite suite);
TrialOutcome run_trial(const StressConfig& config, std::size_t index);

// The serial runner is the reference for the OpenMP one; both return the
// same rows.
StressReport run_stress_serial(const StressConfig& config);
StressReport run_stress_parallel(const StressConfig& config);

// Header row, then one row per trial: seed, the suite columns, violation
// (0/1) and wall_time_ms.
std::string render_csv(const StressReport& report);

}  // namespace zsm

#endif  // ZSM_STRESS_H_
