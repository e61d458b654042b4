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

#ifndef ZSM_CLI_H_
#define ZSM_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zsm {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // bad flags or a malformed input file
  kExitPipeline = 2,      // no zero-sum cycle found
  kExitVerification = 3,  // a witness does not check out
  kExitViolation = 4,     // an invariant failed
};

// One line of `find` output.
struct ExperimentRow {
  std::uint64_t seed = 0;
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::uint64_t n = 0;
  std::uint64_t m_used = 0;
  std::uint64_t u_size = 0;
  std::uint64_t cycle_length = 0;
  bool verified = false;
  std::int64_t wall_time_ms = 0;
};

std::string experiment_header();
std::string render_row(const ExperimentRow& row);

// Runs the command line `args` (without the program name). Writes results
// to `out`, diagnostics to `err` and returns an ExitCode.
//
//   gen --p P --d D --n N --seed S [--out FILE]
//   find INSTANCE [--out WITNESS] [--m M] [--mode exact|heuristic] [--seed S]
//   verify INSTANCE WITNESS
//   stress SUITE [--trials T] [--seed S] [--out CSV] [--p P] [--d D] [--m M]
//          [--mode exact|heuristic] [--serial]
//   lower-bound --p P --d D [--out FILE]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsm

#endif  // ZSM_CLI_H_
