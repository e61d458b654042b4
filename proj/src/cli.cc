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

#include "zsm/cli.h"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zsm/errors.h"
#include "zsm/gf_algebra.h"
#include "zsm/instance_io.h"
#include "zsm/random_instances.h"
#include "zsm/stress.h"
#include "zsm/zerosum.h"

namespace zsm {
namespace {

struct GenArgs {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct FindArgs {
  std::string in;
  std::string out;
  std::optional<std::size_t> m;
  std::string mode = "heuristic";
  std::uint64_t seed = 0;
};

struct VerifyArgs {
  std::string instance;
  std::string witness;
};

struct StressArgs {
  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string out;
  std::uint32_t p = 2;
  std::optional<std::uint32_t> d;
  std::size_t m = 2;
  std::string mode = "exact";
  bool serial = false;
};

struct LowerBoundArgs {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::string out;
};

Mode parse_mode(const std::string& mode) { return mode == "exact" ? Mode::exact : Mode::heuristic; }

// FieldSpec from flags, or nullopt after printing a usage error.
std::optional<FieldSpec> field_from_flags(std::uint32_t p, std::uint32_t d, std::ostream& err) {
  if (!is_prime(p)) {
    err << "error: --p must be prime\n";
    return std::nullopt;
  }
  if (d == 0) {
    err << "error: --d must be at least 1\n";
    return std::nullopt;
  }
  return FieldSpec(p, d);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - since).count();
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const auto spec = field_from_flags(a.p, a.d, err);
  if (!spec) return kExitUsage;
  if (a.n < 2) {
    err << "error: --n must be at least 2\n";
    return kExitUsage;
  }
  emit(a.out, render_instance(random_digraph(*spec, a.n, a.seed)), out);
  return kExitOk;
}

int cmd_find(const FindArgs& a, std::ostream& out, std::ostream& err) {
  const auto dg = parse_instance(read_file(a.in));
  ZeroSumOptions options;
  options.m_override = a.m;
  options.engine.mode = parse_mode(a.mode);
  const auto started = std::chrono::steady_clock::now();
  try {
    const auto report = find_zero_sum_cycle(dg, options);
    ExperimentRow row;
    row.seed = a.seed;
    row.p = dg.spec().p();
    row.d = dg.spec().d();
    row.n = dg.size();
    row.m_used = report.m_used;
    row.u_size = report.u.size();
    row.cycle_length = report.witness.vertices.size();
    row.verified = verify_cycle(dg, report.witness.vertices);
    row.wall_time_ms = elapsed_ms(started);
    if (!row.verified) {
      err << "error: pipeline returned a cycle with nonzero sum\n";
      return kExitViolation;
    }
    if (!a.out.empty()) write_file(a.out, render_witness(report.witness));
    out << experiment_header() << render_row(row);
    return kExitOk;
  } catch (const PipelineFailure& e) {
    err << e.what() << '\n';
    return kExitPipeline;
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto dg = parse_instance(read_file(a.instance));
  const auto w = parse_witness(read_file(a.witness));
  const auto& spec = dg.spec();
  if (w.sum.size() != spec.d()) {
    err << "error: sum line has " << w.sum.size() << " coordinates, expected " << spec.d() << '\n';
    return kExitUsage;
  }
  for (auto c : w.sum) {
    if (c >= spec.p()) {
      err << "error: sum residue " << c << " not reduced mod " << spec.p() << '\n';
      return kExitUsage;
    }
  }
  bool zero = false;
  try {
    zero = verify_cycle(dg, w.cycle);
  } catch (const std::invalid_argument& e) {
    err << "error: malformed cycle: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto sum = cycle_sum(dg, w.cycle);
  if (sum != GroupVector(spec, std::vector<std::uint64_t>(w.sum.begin(), w.sum.end()))) {
    err << "verification failed: cycle sums to " << sum << ", witness claims otherwise\n";
    return kExitVerification;
  }
  if (!zero) {
    err << "verification failed: cycle sums to " << sum << '\n';
    return kExitVerification;
  }
  out << "ok: zero-sum cycle of length " << w.cycle.size() << '\n';
  return kExitOk;
}

int cmd_stress(const StressArgs& a, std::ostream& out, std::ostream& err) {
  const auto suite = parse_suite(a.suite);
  if (!suite) {
    err << "error: unknown suite '" << a.suite << "'\n";
    return kExitUsage;
  }
  StressConfig config;
  config.suite = *suite;
  config.trials = a.trials;
  config.seed = a.seed;
  config.p = a.p;
  config.d = a.d.value_or(*suite == StressSuite::fprobe ? 1 : 3);
  config.copies = a.m;
  config.engine.mode = parse_mode(a.mode);
  if (!field_from_flags(config.p, config.d, err)) return kExitUsage;
  if (config.copies == 0) {
    err << "error: --m must be at least 1\n";
    return kExitUsage;
  }

  const auto report = a.serial ? run_stress_serial(config) : run_stress_parallel(config);
  emit(a.out, render_csv(report), out);

  std::ostream& summary = a.out.empty() ? err : out;
  if (*suite == StressSuite::fprobe && !report.trials.empty()) {
    const auto& values = report.trials.front().values;
    summary << values[2] << (values[3] != 0 ? " (exact)" : " (sampled)") << '\n';
  } else {
    summary << suite_name(*suite) << ": " << report.trials.size() << " trials, " << report.violation_count()
            << " violations\n";
  }
  if (report.violation_count() == 0) return kExitOk;

  const std::filesystem::path base = a.out.empty() ? std::filesystem::path("stress") : std::filesystem::path(a.out);
  for (std::size_t i = 0; i < report.trials.size(); ++i) {
    const auto& t = report.trials[i];
    if (t.violations.empty()) continue;
    for (const auto& v : t.violations) err << "trial " << i << " (seed " << t.seed << "): " << v << '\n';
    if (!t.replay.empty()) {
      const auto path = base.string() + ".trial" + std::to_string(i) + ".replay";
      write_file(path, t.replay);
      err << "  replay written to " << path << '\n';
    }
  }
  return kExitViolation;
}

int cmd_lower_bound(const LowerBoundArgs& a, std::ostream& out, std::ostream& err) {
  const auto spec = field_from_flags(a.p, a.d, err);
  if (!spec) return kExitUsage;
  const std::uint64_t n = std::uint64_t{a.p - 1} * a.d;
  if (n < 2) {
    err << "error: (p-1)d = " << n << " leaves no cycle to avoid\n";
    return kExitUsage;
  }
  const auto dg = lower_bound_witness(*spec);
  if (n <= 6) {
    if (const auto cycle = bf_zero_sum_cycle(dg)) {
      err << "invariant violation: zero-sum cycle of length " << cycle->vertices.size() << " found\n";
      return kExitViolation;
    }
    (a.out.empty() ? err : out) << "no zero-sum cycle on " << n << " vertices (exhaustive)\n";
  }
  emit(a.out, render_instance(dg), out);
  return kExitOk;
}

}  // namespace

std::string experiment_header() { return "seed,p,d,n,m_used,u_size,cycle_length,verified,wall_time_ms\n"; }

std::string render_row(const ExperimentRow& row) {
  return std::to_string(row.seed) + ',' + std::to_string(row.p) + ',' + std::to_string(row.d) + ',' +
         std::to_string(row.n) + ',' + std::to_string(row.m_used) + ',' + std::to_string(row.u_size) + ',' +
         std::to_string(row.cycle_length) + ',' + (row.verified ? "1" : "0") + ',' +
         std::to_string(row.wall_time_ms) + '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-sum cycles in Z_p^d-labelled complete digraphs"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a uniformly random instance");
  gen_cmd->add_option("--p", gen.p, "Prime p")->required();
  gen_cmd->add_option("--d", gen.d, "Dimension d")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output file (default: stdout)");

  const std::vector<std::string> modes = {"exact", "heuristic"};
  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "Search an instance for a zero-sum cycle");
  find_cmd->add_option("instance", find.in, "Instance file")->required();
  find_cmd->add_option("--out", find.out, "Witness file");
  find_cmd->add_option("--m", find.m, "Number of disjoint basis matchings")->check(CLI::PositiveNumber);
  find_cmd->add_option("--mode", find.mode, "Matching engine mode")->check(CLI::IsMember(modes));
  find_cmd->add_option("--seed", find.seed, "Seed recorded in the output row");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness against an instance");
  verify_cmd->add_option("instance", verify.instance, "Instance file")->required();
  verify_cmd->add_option("witness", verify.witness, "Witness file")->required();

  StressArgs stress;
  auto* stress_cmd = app.add_subcommand("stress", "Run a randomized property suite");
  stress_cmd->add_option("suite", stress.suite, "haxell, lemma31, lemma32, lemma33 or fprobe")->required();
  stress_cmd->add_option("--trials", stress.trials, "Trial count (fprobe: samples per m)");
  stress_cmd->add_option("--seed", stress.seed, "Base seed; trial i uses seed + i");
  stress_cmd->add_option("--out", stress.out, "CSV file (default: stdout)");
  stress_cmd->add_option("--p", stress.p, "Prime of the linear matroids or the probed field");
  stress_cmd->add_option("--d", stress.d, "Largest rank, or the probed dimension");
  stress_cmd->add_option("--m", stress.m, "Matchings per run (lemma33)");
  stress_cmd->add_option("--mode", stress.mode, "Matching engine mode")->check(CLI::IsMember(modes));
  stress_cmd->add_flag("--serial", stress.serial, "Run trials on one thread");

  LowerBoundArgs lower;
  auto* lower_cmd = app.add_subcommand("lower-bound", "Write the (p-1)d-vertex instance without zero-sum cycles");
  lower_cmd->add_option("--p", lower.p, "Prime p")->required();
  lower_cmd->add_option("--d", lower.d, "Dimension d")->required();
  lower_cmd->add_option("--out", lower.out, "Output file (default: stdout)");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("zsm");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen, out, err);
    if (find_cmd->parsed()) return cmd_find(find, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (stress_cmd->parsed()) return cmd_stress(stress, out, err);
    if (lower_cmd->parsed()) return cmd_lower_bound(lower, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zsm
