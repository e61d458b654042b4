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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "zsm/random_instances.h"
#include "zsm/stress.h"
#include "zsm/zerosum.h"

namespace {

void BM_TripleLabelsSerial(benchmark::State& state) {
  const zsm::FieldSpec spec(2, 3);
  const auto dg = zsm::random_digraph(spec, static_cast<std::size_t>(state.range(0)), 1);
  const auto triples = zsm::ordered_triples(dg.size());
  for (auto _ : state) benchmark::DoNotOptimize(zsm::triple_labels_serial(dg, triples));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(triples.size()));
}

void BM_TripleLabelsParallel(benchmark::State& state) {
  const zsm::FieldSpec spec(2, 3);
  const auto dg = zsm::random_digraph(spec, static_cast<std::size_t>(state.range(0)), 1);
  const auto triples = zsm::ordered_triples(dg.size());
  for (auto _ : state) benchmark::DoNotOptimize(zsm::triple_labels_parallel(dg, triples));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(triples.size()));
}

zsm::StressConfig stress_config(std::int64_t trials) {
  zsm::StressConfig config;
  config.suite = zsm::StressSuite::lemma32;
  config.trials = static_cast<std::size_t>(trials);
  config.seed = 1;
  return config;
}

void BM_StressSerial(benchmark::State& state) {
  const auto config = stress_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zsm::run_stress_serial(config));
}

void BM_StressParallel(benchmark::State& state) {
  const auto config = stress_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zsm::run_stress_parallel(config));
}

}  // namespace

BENCHMARK(BM_TripleLabelsSerial)->Arg(15)->Arg(30)->Arg(60)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TripleLabelsParallel)->Arg(15)->Arg(30)->Arg(60)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_StressSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StressParallel)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
