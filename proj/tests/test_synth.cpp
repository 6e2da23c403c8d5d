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

#include "mctsynth/bench.hpp"
#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"
#include "mctsynth/synth.hpp"

namespace mctsynth {
namespace {

SynthesisResult run(const Permutation& goal, int threads = 1, int max_bound = kDefaultMaxBound) {
  return synthesize({.goal = goal, .max_bound = max_bound, .threads = threads});
}

std::vector<std::uint32_t> codes(const Circuit& c) {
  std::vector<std::uint32_t> out;
  for (const auto& g : c.gates()) out.push_back(encode(g).bits);
  return out;
}

TEST(Synthesize, Identity) {
  const auto r = run(Permutation::identity(3));
  EXPECT_EQ(r.status, Status::solved);
  EXPECT_EQ(r.gc, 0u);
  ASSERT_TRUE(r.circuit);
  EXPECT_TRUE(r.circuit->empty());
}

TEST(Synthesize, TableExamples) {
  const auto peres = run(Permutation(3, {0, 3, 2, 5, 4, 7, 6, 1}));
  EXPECT_EQ(peres.gc, 2u);
  EXPECT_EQ(peres.qc, 6u);
  const auto ham3 = run(Permutation(3, {0, 7, 4, 3, 2, 5, 1, 6}));
  EXPECT_EQ(ham3.gc, 5u);
  EXPECT_EQ(ham3.qc, 9u);
  const auto rev = run(Permutation(3, {7, 6, 5, 4, 3, 2, 1, 0}));
  EXPECT_EQ(rev.gc, 3u);
  EXPECT_EQ(rev.qc, 3u);
}

TEST(Synthesize, BoundExhausted) {
  const auto r = run(Permutation(3, {0, 3, 2, 5, 4, 7, 6, 1}), 1, 1);
  EXPECT_EQ(r.status, Status::bound_exhausted);
  EXPECT_FALSE(r.circuit);
  EXPECT_EQ(r.bound_reached, 1);
}

TEST(Synthesize, SingleLine) {
  EXPECT_EQ(run(Permutation(1, {1, 0})).gc, 1u);
  EXPECT_EQ(run(Permutation::identity(1)).gc, 0u);
}

TEST(Synthesize, Timeout) {
  // Deep 9-line goal; far more work than the deadline allows.
  const auto goal = random_goal(9, 10, 1).goal;
  const auto r = synthesize({.goal = goal, .timeout_seconds = 0.05});
  EXPECT_EQ(r.status, Status::timed_out);
  EXPECT_FALSE(r.circuit);
}

TEST(Synthesize, SoundAndMinimalOnTable) {
  for (const auto& f : table1_fixtures()) {
    const auto r = run(f.goal);
    ASSERT_EQ(r.status, Status::solved) << f.name;
    EXPECT_TRUE(verify(*r.circuit, f.goal)) << f.name;
    EXPECT_EQ(r.gc, r.circuit->gate_count());
    EXPECT_EQ(static_cast<std::size_t>(r.bound_reached), r.gc);
    EXPECT_EQ(r.qc, r.circuit->quantum_cost());
    if (r.gc > 0) {
      EXPECT_EQ(run(f.goal, 1, static_cast<int>(r.gc) - 1).status, Status::bound_exhausted);
    }
  }
}

TEST(Synthesize, DeterministicAcrossThreads) {
  for (const auto& f : table1_fixtures()) {
    const auto one = run(f.goal, 1);
    const auto four = run(f.goal, 4);
    ASSERT_TRUE(one.circuit && four.circuit);
    EXPECT_EQ(*one.circuit, *four.circuit) << f.name;
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto goal = random_goal(6, 5, seed).goal;
    EXPECT_EQ(*run(goal, 1).circuit, *run(goal, 4).circuit);
  }
}

TEST(Synthesize, Monotone) {
  const Permutation goal(3, {7, 1, 4, 3, 0, 2, 6, 5});
  const auto tight = run(goal, 1, 6);
  const auto loose = run(goal, 1, 20);
  ASSERT_EQ(tight.status, Status::solved);
  EXPECT_LE(loose.gc, tight.gc);
}

TEST(Oracle, SingleGateDepthOne) {
  for (const auto& g : enumerate_gates(3)) {
    const auto r = bfs_oracle(gate_to_permutation(g), 3);
    EXPECT_EQ(r.gc, 1u);
    EXPECT_EQ(r.circuit->gates()[0], g);
  }
}

TEST(Oracle, ThreeSeventeen) {
  const auto r = bfs_oracle(Permutation(3, {7, 1, 4, 3, 0, 2, 6, 5}), 10);
  EXPECT_EQ(r.status, Status::solved);
  EXPECT_EQ(r.gc, 6u);
}

TEST(Oracle, WorkedExampleNeedsFourGates) {
  const Permutation goal(4, {0, 1, 2, 11, 4, 5, 15, 6, 8, 13, 10, 14, 9, 12, 3, 7});
  EXPECT_EQ(bfs_oracle(goal, 3).status, Status::bound_exhausted);
  const auto r = bfs_oracle(goal, 4);
  ASSERT_EQ(r.status, Status::solved);
  EXPECT_EQ(r.gc, 4u);
  EXPECT_TRUE(verify(*r.circuit, goal));
  EXPECT_EQ(*run(goal).circuit, *r.circuit);
}

TEST(Oracle, ResourceLimit) {
  try {
    bfs_oracle(Permutation(3, {7, 1, 4, 3, 0, 2, 6, 5}), 10, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::resource);
    EXPECT_NE(std::string(e.what()).find("frontier"), std::string::npos);
  }
}

TEST(Oracle, EquivalenceOnRandomGoals) {
  // n = 4 is held to depth 3 here; deeper 4-line layers cost too much
  // memory for a unit test.
  const std::pair<int, int> plans[] = {{2, 6}, {3, 6}, {4, 3}};
  for (auto [n, max_k] : plans) {
    for (int i = 0; i < 200; ++i) {
      const int k = i % (max_k + 1);
      const auto goal = random_goal(n, k, 1000u * n + i).goal;
      const auto fast = run(goal);
      const auto slow = bfs_oracle(goal, max_k);
      ASSERT_EQ(slow.status, Status::solved);
      ASSERT_EQ(fast.gc, slow.gc) << n << " " << i;
      ASSERT_EQ(codes(*fast.circuit), codes(*slow.circuit)) << n << " " << i;
    }
  }
}

TEST(Oracle, EngineOption) {
  const Permutation peres(3, {0, 3, 2, 5, 4, 7, 6, 1});
  const auto r = synthesize({.goal = peres, .engine = Engine::bfs});
  EXPECT_EQ(r.gc, 2u);
  EXPECT_EQ(*r.circuit, *run(peres).circuit);
}

TEST(Verify, Examples) {
  const Permutation p(4, {0, 1, 2, 11, 4, 5, 15, 6, 8, 13, 10, 14, 9, 12, 3, 7});
  const Circuit cascade(4, {MctGate(4, 3, {0, 1}), MctGate(4, 1, {0, 3}), MctGate(4, 3, {1, 2}),
                        MctGate(4, 0, {2, 3})});
  EXPECT_TRUE(verify(Circuit(3), Permutation::identity(3)));
  EXPECT_TRUE(verify(cascade, p));
  EXPECT_FALSE(verify(cascade, Permutation::identity(4)));
  EXPECT_EQ(first_mismatch(Circuit(3), Permutation(3, {0, 3, 2, 5, 4, 7, 6, 1})), Word{1});
  EXPECT_THROW(verify(cascade, Permutation::identity(3)), Error);
}

TEST(Engine, Names) {
  EXPECT_EQ(engine_from_string("iddfs"), Engine::iddfs);
  EXPECT_EQ(engine_from_string("bfs"), Engine::bfs);
  EXPECT_EQ(engine_from_string("smv"), Engine::smv);
  EXPECT_THROW(engine_from_string("sat"), Error);
}

// A 1-bit full adder embedded on four lines (a, b, c, d): Toffoli(a,b;d),
// CNOT(a;b), Toffoli(b,c;d), CNOT(b;c). The goal is the map this cascade
// computes; the oracle decides its optimal length.
TEST(Synthesize, AdderEmbedding) {
  const Circuit adder(4, {MctGate(4, 3, {0, 1}), MctGate(4, 1, {0}), MctGate(4, 3, {1, 2}),
                          MctGate(4, 2, {1})});
  const auto goal = circuit_to_permutation(adder);
  const auto oracle = bfs_oracle(goal, 4);
  ASSERT_EQ(oracle.status, Status::solved);
  EXPECT_EQ(oracle.gc, 4u);
  const auto r = run(goal);
  EXPECT_EQ(r.gc, 4u);
  EXPECT_EQ(*r.circuit, *oracle.circuit);
}

}  // namespace
}  // namespace mctsynth
