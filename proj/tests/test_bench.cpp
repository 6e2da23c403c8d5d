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

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "mctsynth/bench.hpp"
#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"
#include "mctsynth/synth.hpp"

namespace mctsynth {
namespace {

// Three-input results table as published: permutation, GC, QC. Row six is
// printed as "1,0,3,2,5,7,4 6" in the source.
constexpr const char* kPublished = R"(
0,3,2,5,4,7,6,1 2 6
0,1,2,5,4,3,6,7 3 7
0,7,4,3,2,5,1,6 5 9
0,2,3,5,7,1,4,6 4 8
4,5,6,1,0,7,2,3 4 16
1,0,3,2,5,7,4,6 4 8
7,0,1,2,3,4,5,6 3 7
0,1,2,4,3,5,6,7 5 9
1,2,3,4,5,6,7,0 3 7
3,6,2,5,7,1,0,4 7 19
1,2,7,5,6,3,0,4 6 14
7,5,2,4,6,1,0,3 7 19
7,6,5,4,3,2,1,0 3 3
4,3,0,2,7,5,6,1 6 10
7,1,4,3,0,2,6,5 6 14
)";

TEST(Fixtures, MatchPublishedTable) {
  std::istringstream in(kPublished);
  std::string perm;
  std::size_t gc = 0;
  std::uint64_t qc = 0;
  const auto fixtures = table1_fixtures();
  std::size_t row = 0;
  while (in >> perm >> gc >> qc) {
    ASSERT_LT(row, fixtures.size());
    EXPECT_EQ(fixtures[row].goal.to_string(), perm) << row;
    EXPECT_EQ(fixtures[row].expected_gc, gc) << row;
    EXPECT_EQ(fixtures[row].expected_qc, qc) << row;
    ++row;
  }
  EXPECT_EQ(row, 15u);
  EXPECT_EQ(fixtures.size(), 15u);

  std::set<std::string> pinned;
  for (const auto& f : fixtures) {
    if (f.qc_pinned) pinned.insert(f.name);
  }
  EXPECT_EQ(pinned, (std::set<std::string>{"peres", "fredkin", "ham3", "reversal"}));
}

TEST(RandomGoal, Reproducible) {
  const auto a = random_goal(6, 4, 42);
  const auto b = random_goal(6, 4, 42);
  EXPECT_EQ(a.goal, b.goal);
  EXPECT_EQ(a.generator, b.generator);
  EXPECT_EQ(a.generator.gate_count(), 4u);
  EXPECT_EQ(circuit_to_permutation(a.generator), a.goal);
  EXPECT_NE(random_goal(6, 4, 43).generator, a.generator);
  EXPECT_TRUE(random_goal(5, 0, 1).goal.is_identity());
}

TEST(RandomGoal, CoversGateLibrary) {
  std::set<std::uint32_t> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto rg = random_goal(3, 5, seed);
    for (const auto& g : rg.generator.gates()) seen.insert(encode(g).bits);
  }
  EXPECT_EQ(seen.size(), enumerate_gates(3).size());
}

TEST(Bench, ThreeLineSuiteAllPass) {
  const auto cases = run_bench({});
  ASSERT_EQ(cases.size(), 15u);
  for (const auto& c : cases) {
    EXPECT_TRUE(c.passed) << c.report.name << ": " << c.detail;
    EXPECT_EQ(c.report.status, "PASS");
  }
}

TEST(Bench, RandomSuite) {
  BenchConfig config;
  config.suite = "random";
  config.lines = 6;
  config.gates = 4;
  config.count = 5;
  config.seed = 100;
  const auto cases = run_bench(config);
  ASSERT_EQ(cases.size(), 5u);
  for (const auto& c : cases) {
    EXPECT_TRUE(c.passed) << c.report.name;
    EXPECT_LE(c.report.gc, 4u);
  }
  config.gates = 0;
  config.count = 1;
  const auto zero = run_bench(config);
  EXPECT_EQ(zero[0].report.gc, 0u);
  EXPECT_TRUE(zero[0].passed);
}

TEST(Bench, TimeoutIsReported) {
  BenchConfig config;
  config.suite = "random";
  config.lines = 9;
  config.gates = 10;
  config.seed = 1;
  config.timeout_seconds = 0.05;
  const auto cases = run_bench(config);
  ASSERT_EQ(cases.size(), 1u);
  EXPECT_EQ(cases[0].report.status, "TIMEOUT");
  EXPECT_FALSE(cases[0].passed);
}

TEST(Bench, UnknownSuite) {
  BenchConfig config;
  config.suite = "table9";
  EXPECT_THROW(run_bench(config), Error);
}

}  // namespace
}  // namespace mctsynth
