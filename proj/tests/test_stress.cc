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

#include <cctype>
#include <sstream>

#include "zsm/stress.h"

using zsm::StressConfig;
using zsm::StressSuite;

namespace {

constexpr StressSuite kTrialSuites[] = {StressSuite::haxell, StressSuite::lemma31, StressSuite::lemma32,
                                        StressSuite::lemma33};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, sep)) out.push_back(cell);
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  const std::size_t start = s[0] == '-' ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("suite names") {
  for (auto suite : kTrialSuites) CHECK(zsm::parse_suite(zsm::suite_name(suite)) == suite);
  CHECK(zsm::parse_suite("fprobe") == StressSuite::fprobe);
  CHECK_FALSE(zsm::parse_suite("lemma34").has_value());
  CHECK_FALSE(zsm::parse_suite("").has_value());
}

TEST_CASE("serial and parallel runs agree") {
  for (auto suite : kTrialSuites) {
    StressConfig config;
    config.suite = suite;
    config.trials = 24;
    config.seed = 500;
    const auto serial = zsm::run_stress_serial(config);
    const auto parallel = zsm::run_stress_parallel(config);
    REQUIRE(serial.trials.size() == 24);
    REQUIRE(parallel.trials.size() == 24);
    CHECK(serial.columns == parallel.columns);
    for (std::size_t i = 0; i < serial.trials.size(); ++i) {
      CHECK(serial.trials[i].same_result(parallel.trials[i]));
      CHECK(serial.trials[i].seed == 500 + i);
      CHECK(serial.trials[i].values.size() == serial.columns.size());
    }
  }
}

TEST_CASE("trials are reproducible one at a time") {
  StressConfig config;
  config.suite = StressSuite::lemma32;
  config.seed = 77;
  const auto whole = zsm::run_stress_serial(config);
  CHECK(zsm::run_trial(config, 13).same_result(whole.trials[13]));
  CHECK_FALSE(zsm::run_trial(config, 14).same_result(whole.trials[13]));
}

TEST_CASE("small runs report no violations") {
  for (auto suite : kTrialSuites) {
    StressConfig config;
    config.suite = suite;
    config.trials = 60;
    config.seed = 1;
    const auto report = zsm::run_stress_serial(config);
    CHECK_MESSAGE(report.violation_count() == 0, zsm::suite_name(suite));
    for (const auto& t : report.trials) {
      for (const auto& v : t.violations) MESSAGE(v);
    }
  }
  StressConfig ternary;
  ternary.suite = StressSuite::lemma32;
  ternary.p = 3;
  ternary.d = 2;
  ternary.trials = 40;
  CHECK(zsm::run_stress_serial(ternary).violation_count() == 0);

  StressConfig heuristic;
  heuristic.suite = StressSuite::lemma33;
  heuristic.engine.mode = zsm::Mode::heuristic;
  heuristic.copies = 3;
  heuristic.trials = 40;
  CHECK(zsm::run_stress_serial(heuristic).violation_count() == 0);
}

TEST_CASE("fprobe is a single row") {
  StressConfig config;
  config.suite = StressSuite::fprobe;
  config.p = 3;
  config.d = 1;
  config.trials = 20;
  const auto report = zsm::run_stress_serial(config);
  REQUIRE(report.trials.size() == 1);
  CHECK(report.violation_count() == 0);
  const auto& values = report.trials[0].values;
  REQUIRE(values.size() == 5);
  CHECK(values[0] == 3);
  CHECK(values[1] == 1);
  CHECK(values[2] == 2);
  CHECK(values[3] == 1);
  CHECK(report.trials[0].same_result(zsm::run_stress_parallel(config).trials[0]));
}

TEST_CASE("csv output") {
  StressConfig config;
  config.suite = StressSuite::haxell;
  config.trials = 10;
  config.seed = 3;
  const auto report = zsm::run_stress_serial(config);
  const auto csv = zsm::render_csv(report);
  std::stringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  const auto header = split(line, ',');
  CHECK(header.front() == "seed");
  CHECK(header[header.size() - 2] == "violation");
  CHECK(header.back() == "wall_time_ms");
  CHECK(header.size() == zsm::stress_columns(StressSuite::haxell).size() + 3);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    const auto cells = split(line, ',');
    CHECK(cells.size() == header.size());
    for (const auto& c : cells) CHECK(is_integer(c));
    CHECK(cells.front() == std::to_string(3 + rows));
    ++rows;
  }
  CHECK(rows == 10);
  CHECK(csv.back() == '\n');
}

TEST_CASE("exceptions inside a trial become violations") {
  // An impossible probe (p^d far past the budget) is recorded, not thrown.
  StressConfig config;
  config.suite = StressSuite::fprobe;
  config.p = 2;
  config.d = 40;
  const auto report = zsm::run_stress_serial(config);
  REQUIRE(report.trials.size() == 1);
  CHECK(report.violation_count() == 1);
  CHECK(report.trials[0].values.size() == 5);
}
