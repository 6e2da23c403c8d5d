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

// Gate-count optimal synthesis.
//
// synthesize() deepens a bound from 0 and asks, at each bound, whether some
// cascade of exactly that many MCT gates maps the identity permutation onto
// the goal. The first bound that succeeds is the optimal gate count. Among all
// optimal cascades the one whose gate-code sequence is lexicographically
// smallest is returned, regardless of engine or thread count.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mctsynth/model.hpp"
#include "mctsynth/smv.hpp"

namespace mctsynth {

enum class Engine { iddfs, bfs, smv };

const char* to_string(Engine engine) noexcept;
Engine engine_from_string(std::string_view text);

inline constexpr int kDefaultMaxBound = 32;

struct SynthesisRequest {
  Permutation goal;
  int max_bound = kDefaultMaxBound;
  Engine engine = Engine::iddfs;
  int threads = 1;
  /// Wall-clock budget for the whole call; unlimited when empty.
  std::optional<double> timeout_seconds{};
  /// bfs engine only.
  std::size_t max_states = 4'000'000;
  /// smv engine only.
  smv::SpecLogic spec = smv::SpecLogic::ltl;
  smv::CheckerOptions checker{};
};

enum class Status { solved, bound_exhausted, timed_out };

const char* to_string(Status status) noexcept;

struct SynthesisResult {
  Status status = Status::bound_exhausted;
  std::optional<Circuit> circuit;  // present iff solved
  std::size_t gc = 0;
  std::uint64_t qc = 0;
  double elapsed_seconds = 0.0;
  std::uint64_t nodes_explored = 0;
  /// Solved: the optimal gate count. Otherwise the last bound fully searched,
  /// or -1 if none was.
  int bound_reached = -1;
};

SynthesisResult synthesize(const SynthesisRequest& request);

/// Breadth-first search from the identity over explicit permutations, built
/// only from gate_to_permutation and compose. Exponential memory; meant as an
/// optimality oracle for n <= 4. Throws ErrorKind::resource once more than
/// `max_states` permutations are stored.
SynthesisResult bfs_oracle(const Permutation& goal, int max_depth,
                           std::size_t max_states = 4'000'000);

/// Throws a dimension error if the line counts differ.
bool verify(const Circuit& circuit, const Permutation& goal);

/// First input word on which the circuit disagrees with the goal.
std::optional<Word> first_mismatch(const Circuit& circuit, const Permutation& goal);

}  // namespace mctsynth
