// Copyright 2026 The mctsynth Authors
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

#include "mctsynth/bench.hpp"

#include <random>

#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"

namespace mctsynth {

namespace {

BenchmarkFixture fixture(std::string name, std::vector<Word> map, std::size_t gc,
                         std::uint64_t qc, bool pinned) {
  return {std::move(name), Permutation(3, std::move(map)), gc, qc, pinned};
}

}  // namespace

std::span<const BenchmarkFixture> table1_fixtures() {
  static const std::vector<BenchmarkFixture> fixtures = {
      fixture("peres", {0, 3, 2, 5, 4, 7, 6, 1}, 2, 6, true),
      fixture("fredkin", {0, 1, 2, 5, 4, 3, 6, 7}, 3, 7, true),
      fixture("ham3", {0, 7, 4, 3, 2, 5, 1, 6}, 5, 9, true),
      fixture("nth_prime", {0, 2, 3, 5, 7, 1, 4, 6}, 4, 8, false),
      fixture("ex1", {4, 5, 6, 1, 0, 7, 2, 3}, 4, 16, false),
      fixture("row6", {1, 0, 3, 2, 5, 7, 4, 6}, 4, 8, false),
      fixture("decrement", {7, 0, 1, 2, 3, 4, 5, 6}, 3, 7, false),
      fixture("miller", {0, 1, 2, 4, 3, 5, 6, 7}, 5, 9, false),
      fixture("increment", {1, 2, 3, 4, 5, 6, 7, 0}, 3, 7, false),
      fixture("row10", {3, 6, 2, 5, 7, 1, 0, 4}, 7, 19, false),
      fixture("row11", {1, 2, 7, 5, 6, 3, 0, 4}, 6, 14, false),
      fixture("row12", {7, 5, 2, 4, 6, 1, 0, 3}, 7, 19, false),
      fixture("reversal", {7, 6, 5, 4, 3, 2, 1, 0}, 3, 3, true),
      fixture("row14", {4, 3, 0, 2, 7, 5, 6, 1}, 6, 10, false),
      fixture("3_17", {7, 1, 4, 3, 0, 2, 6, 5}, 6, 14, false),
  };
  return fixtures;
}

RandomGoal random_goal(int lines, int gates, std::uint64_t seed) {
  check_lines(lines);
  if (gates < 0) throw Error(ErrorKind::configuration, "gate count must be non-negative");
  std::mt19937_64 rng(seed);
  const std::uint64_t universe = static_cast<std::uint64_t>(lines) << (lines - 1);
  Circuit generator(lines);
  for (int i = 0; i < gates; ++i) {
    generator.append(decode({lines, static_cast<std::uint32_t>(rng() % universe)}));
  }
  return {circuit_to_permutation(generator), generator, seed};
}

namespace {

BenchCase run_case(const BenchConfig& config, std::string name, const Permutation& goal) {
  SynthesisRequest req{.goal = goal};
  req.engine = config.engine;
  req.max_bound = config.max_bound;
  req.threads = config.threads;
  req.timeout_seconds = config.timeout_seconds;
  req.spec = config.spec;
  req.checker = config.checker;
  const auto result = synthesize(req);

  BenchCase c;
  if (result.circuit) {
    c.report = ResultReport::from_circuit(std::move(name), *result.circuit, result.elapsed_seconds,
                                          to_string(config.engine), "");
  } else {
    c.report.name = std::move(name);
    c.report.lines = goal.lines();
    c.report.elapsed_seconds = result.elapsed_seconds;
    c.report.engine = to_string(config.engine);
  }
  if (result.circuit && !verify(*result.circuit, goal)) {
    c.report.status = "FAIL";
    c.detail = "returned cascade does not realize the goal";
  } else if (result.status == Status::timed_out) {
    c.report.status = "TIMEOUT";
    c.detail = "no answer within " + std::to_string(config.timeout_seconds) + " s";
  } else if (result.status == Status::bound_exhausted) {
    c.report.status = "FAIL";
    c.detail = "no cascade within bound " + std::to_string(config.max_bound);
  }
  return c;
}

}  // namespace

std::vector<BenchCase> run_bench(const BenchConfig& config) {
  std::vector<BenchCase> out;
  if (config.suite == "table1") {
    for (const auto& f : table1_fixtures()) {
      auto c = run_case(config, f.name, f.goal);
      if (c.report.status.empty()) {
        const bool gc_ok = c.report.gc == f.expected_gc;
        const bool qc_ok = !f.qc_pinned || c.report.qc == f.expected_qc;
        c.passed = gc_ok && qc_ok;
        c.report.status = c.passed ? "PASS" : "FAIL";
        c.detail = "expected GC " + std::to_string(f.expected_gc) + ", QC " +
                   std::to_string(f.expected_qc) + (f.qc_pinned ? "" : " (QC not pinned)");
      }
      out.push_back(std::move(c));
    }
  } else if (config.suite == "random") {
    for (int i = 0; i < config.count; ++i) {
      const auto seed = config.seed + static_cast<std::uint64_t>(i);
      const auto rg = random_goal(config.lines, config.gates, seed);
      const auto name = "random_n" + std::to_string(config.lines) + "_k" +
                        std::to_string(config.gates) + "_s" + std::to_string(seed);
      auto c = run_case(config, name, rg.goal);
      if (c.report.status.empty()) {
        c.passed = c.report.gc <= static_cast<std::size_t>(config.gates);
        c.report.status = c.passed ? "PASS" : "FAIL";
        c.detail = "seed " + std::to_string(seed) + ", generated from " +
                   std::to_string(config.gates) + " gates";
      }
      out.push_back(std::move(c));
    }
  } else {
    throw Error(ErrorKind::configuration, "unknown suite '" + config.suite + "'");
  }
  return out;
}

}  // namespace mctsynth
