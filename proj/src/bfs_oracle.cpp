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

#include <cstdint>
#include <cstring>
#include <unordered_set>

#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"
#include "mctsynth/synth.hpp"

namespace mctsynth {

namespace {

struct Node {
  std::uint32_t parent;
  std::uint32_t gate;
};

constexpr std::uint32_t kRoot = 0xffffffffu;

// Visited permutations stored back to back; the hash set holds indices.
class StateArena {
 public:
  explicit StateArena(std::size_t width) : width_(width) {}

  std::span<const Word> operator[](std::uint32_t i) const {
    return {words_.data() + std::size_t{i} * width_, width_};
  }
  std::uint32_t size() const { return static_cast<std::uint32_t>(words_.size() / width_); }

  std::uint32_t push(std::span<const Word> map) {
    words_.insert(words_.end(), map.begin(), map.end());
    return size() - 1;
  }
  void pop() { words_.resize(words_.size() - width_); }

 private:
  std::size_t width_;
  std::vector<Word> words_;
};

struct IndexHash {
  const StateArena* arena;
  std::size_t operator()(std::uint32_t i) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Word w : (*arena)[i]) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct IndexEqual {
  const StateArena* arena;
  bool operator()(std::uint32_t a, std::uint32_t b) const noexcept {
    const auto x = (*arena)[a];
    const auto y = (*arena)[b];
    return std::memcmp(x.data(), y.data(), x.size_bytes()) == 0;
  }
};

}  // namespace

// Layers are expanded in discovery order with gates in ascending code order,
// so the first path found to any permutation is its lexicographically
// smallest shortest path.
SynthesisResult bfs_oracle(const Permutation& goal, int max_depth, std::size_t max_states) {
  const int n = goal.lines();
  const auto gates = enumerate_gates(n);
  std::vector<Permutation> gate_perms;
  gate_perms.reserve(gates.size());
  for (const auto& g : gates) gate_perms.push_back(gate_to_permutation(g));

  StateArena arena(goal.size());
  std::vector<Node> nodes;
  std::unordered_set<std::uint32_t, IndexHash, IndexEqual> seen(16, IndexHash{&arena},
                                                                IndexEqual{&arena});

  SynthesisResult result;
  auto finish = [&](std::uint32_t index) {
    std::vector<MctGate> path;
    for (std::uint32_t i = index; nodes[i].parent != kRoot; i = nodes[i].parent) {
      path.push_back(gates[nodes[i].gate]);
    }
    Circuit c(n, std::vector<MctGate>(path.rbegin(), path.rend()));
    result.status = Status::solved;
    result.gc = c.gate_count();
    result.qc = c.quantum_cost();
    result.bound_reached = static_cast<int>(result.gc);
    result.circuit = std::move(c);
    result.nodes_explored = nodes.size();
    return result;
  };

  const auto start = Permutation::identity(n);
  seen.insert(arena.push(start.map()));
  nodes.push_back({kRoot, 0});
  if (start == goal) return finish(0);

  std::uint32_t layer_begin = 0;
  for (int depth = 1; depth <= max_depth; ++depth) {
    const std::uint32_t layer_end = arena.size();
    if (layer_begin == layer_end) break;  // every reachable permutation seen
    for (std::uint32_t i = layer_begin; i < layer_end; ++i) {
      const auto here = arena[i];
      const Permutation state(n, std::vector<Word>(here.begin(), here.end()));
      for (std::uint32_t g = 0; g < gate_perms.size(); ++g) {
        const auto next = compose(state, gate_perms[g]);
        const auto index = arena.push(next.map());
        if (!seen.insert(index).second) {
          arena.pop();
          continue;
        }
        nodes.push_back({i, g});
        if (next == goal) return finish(index);
        if (nodes.size() > max_states) {
          throw Error(ErrorKind::resource,
                      "breadth-first oracle exceeded " + std::to_string(max_states) +
                          " states at depth " + std::to_string(depth) + " (frontier " +
                          std::to_string(layer_end - layer_begin) + " states, " +
                          std::to_string(i - layer_begin) + " expanded)");
        }
      }
    }
    result.bound_reached = depth;
    layer_begin = layer_end;
  }
  result.status = Status::bound_exhausted;
  result.bound_reached = max_depth;
  result.nodes_explored = nodes.size();
  return result;
}

}  // namespace mctsynth
