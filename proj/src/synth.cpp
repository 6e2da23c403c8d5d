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

#include "mctsynth/synth.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"

namespace mctsynth {

namespace detail {
SynthesisResult synthesize_with_checker(const SynthesisRequest& request);
}

const char* to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::iddfs: return "iddfs";
    case Engine::bfs: return "bfs";
    case Engine::smv: return "smv";
  }
  return "?";
}

Engine engine_from_string(std::string_view text) {
  if (text == "iddfs") return Engine::iddfs;
  if (text == "bfs") return Engine::bfs;
  if (text == "smv") return Engine::smv;
  throw Error(ErrorKind::configuration, "unknown engine '" + std::string(text) + "'");
}

const char* to_string(Status status) noexcept {
  switch (status) {
    case Status::solved: return "solved";
    case Status::bound_exhausted: return "bound_exhausted";
    case Status::timed_out: return "timed_out";
  }
  return "?";
}

std::optional<Word> first_mismatch(const Circuit& circuit, const Permutation& goal) {
  if (circuit.lines() != goal.lines()) {
    throw Error(ErrorKind::dimension, "circuit has " + std::to_string(circuit.lines()) +
                                          " lines, goal has " + std::to_string(goal.lines()));
  }
  const auto realized = circuit_to_permutation(circuit);
  for (std::size_t w = 0; w < goal.size(); ++w) {
    if (realized[w] != goal[w]) return static_cast<Word>(w);
  }
  return std::nullopt;
}

bool verify(const Circuit& circuit, const Permutation& goal) {
  return !first_mismatch(circuit, goal).has_value();
}

namespace {

using Clock = std::chrono::steady_clock;

// Gate index equals gate code: codes with target < n are dense and ascending.
struct GateMasks {
  Word target;
  Word controls;
  Word free;  // lines that are neither target nor control
};

struct SearchContext {
  int lines;
  Word full;
  std::vector<GateMasks> gates;
  std::vector<Word> goal;
  std::atomic<bool> stop{false};
  std::optional<Clock::time_point> deadline;
};

std::uint32_t code_of(int lines, int target_bit, Word controls) {
  return encode(MctGate::from_masks(lines, Word{1} << target_bit, controls)).bits;
}

bool commute(const GateMasks& a, const GateMasks& b) noexcept {
  return (a.target & b.controls) == 0 && (b.target & a.controls) == 0;
}

// Depth-first search over gate sequences of a fixed length. The current
// cascade output and its inverse are updated in place; a gate only swaps the
// word pairs whose values differ in the target bit inside its control cube.
//
// Pruning, all of which keeps the lexicographically smallest optimal sequence:
//  * a column (target bit) that still differs from the goal needs at least one
//    more gate on it, and at least two if its mismatch count is not a power of
//    two (a single gate flips a cube of 2^m >= 2 words). The sum of these is a
//    lower bound on the remaining gates.
//  * two adjacent gates that commute are only taken in ascending code order;
//    the descending order is always beaten by its swap. This also drops g.g.
class Searcher {
 public:
  explicit Searcher(SearchContext& ctx) : ctx_(ctx) {
    const std::size_t size = std::size_t{1} << ctx.lines;
    current_.resize(size);
    inverse_.resize(size);
    reset();
  }

  void reset() {
    for (std::size_t w = 0; w < current_.size(); ++w) {
      current_[w] = static_cast<Word>(w);
      inverse_[w] = static_cast<Word>(w);
    }
    mismatch_.fill(0);
    for (std::size_t w = 0; w < current_.size(); ++w) {
      const Word diff = current_[w] ^ ctx_.goal[w];
      for (int b = 0; b < ctx_.lines; ++b) mismatch_[b] += (diff >> b) & 1u;
    }
    path_.clear();
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  const std::vector<std::uint32_t>& path() const noexcept { return path_; }

  int lower_bound() const noexcept {
    int h = 0;
    for (int b = 0; b < ctx_.lines; ++b) h += column_bound(b);
    return h;
  }

  void apply(std::uint32_t index) noexcept {
    const GateMasks& g = ctx_.gates[index];
    const int tb = std::countr_zero(g.target);
    int delta = 0;
    Word s = 0;
    do {
      const Word v = g.controls | s;
      const Word u = v | g.target;
      const Word a = inverse_[v];
      const Word b = inverse_[u];
      current_[a] = u;
      current_[b] = v;
      inverse_[v] = b;
      inverse_[u] = a;
      delta += (ctx_.goal[a] & g.target) ? -1 : 1;
      delta += (ctx_.goal[b] & g.target) ? 1 : -1;
      s = (s - g.free) & g.free;
    } while (s != 0);
    mismatch_[tb] += delta;
  }

  /// Searches continuations of the current cascade with exactly `remaining`
  /// more gates. `prev` is the last gate index or -1.
  bool search(int remaining, std::int64_t prev) {
    ++nodes_;
    if ((nodes_ & 0xfff) == 0 && check_stop()) return false;
    const int h = lower_bound();
    if (h > remaining) return false;
    if (remaining == 0) return true;  // h == 0: reached the goal
    if (ctx_.stop.load(std::memory_order_relaxed)) return false;

    const std::uint32_t per_target = std::uint32_t{1} << (ctx_.lines - 1);
    for (int target = 0; target < ctx_.lines; ++target) {
      const int tb = ctx_.lines - 1 - target;
      const int budget = (remaining - 1) - (h - column_bound(tb));
      if (budget < 0) continue;
      const std::uint32_t first = static_cast<std::uint32_t>(target) * per_target;
      if (budget == 0 || remaining == 1) {
        // The gate on this target must clear its column in one step.
        const auto fix = fixing_gate(tb);
        if (!fix) continue;
        if (!try_gate(*fix, remaining, prev)) continue;
        return true;
      }
      for (std::uint32_t i = first; i < first + per_target; ++i) {
        if (try_gate(i, remaining, prev)) return true;
        if (ctx_.stop.load(std::memory_order_relaxed)) return false;
      }
    }
    return false;
  }

  bool try_gate(std::uint32_t index, int remaining, std::int64_t prev) {
    if (prev >= 0) {
      const auto p = static_cast<std::uint32_t>(prev);
      if (index <= p && commute(ctx_.gates[p], ctx_.gates[index])) return false;
    }
    apply(index);
    path_.push_back(index);
    if (search(remaining - 1, index)) return true;
    path_.pop_back();
    apply(index);
    return false;
  }

 private:
  int column_bound(int bit) const noexcept {
    const int m = mismatch_[bit];
    if (m == 0) return 0;
    return std::has_single_bit(static_cast<unsigned>(m)) ? 1 : 2;
  }

  // The unique gate targeting `bit` that makes the column agree with the goal,
  // if any: the mismatched words must hold exactly a control cube's values.
  std::optional<std::uint32_t> fixing_gate(int bit) const {
    const Word tmask = Word{1} << bit;
    const int count = mismatch_[bit];
    if (count == 0 || !std::has_single_bit(static_cast<unsigned>(count))) return std::nullopt;
    Word meet = ctx_.full;
    for (std::size_t w = 0; w < current_.size(); ++w) {
      if ((current_[w] ^ ctx_.goal[w]) & tmask) meet &= current_[w];
    }
    if (meet & tmask) return std::nullopt;
    const int free_bits = ctx_.lines - std::popcount(meet);
    if ((1 << free_bits) != count) return std::nullopt;
    return code_of(ctx_.lines, bit, meet);
  }

  bool check_stop() {
    if (ctx_.stop.load(std::memory_order_relaxed)) return true;
    if (ctx_.deadline && Clock::now() >= *ctx_.deadline) {
      ctx_.stop.store(true);
      return true;
    }
    return false;
  }

  SearchContext& ctx_;
  std::vector<Word> current_;
  std::vector<Word> inverse_;
  std::array<int, kMaxLines> mismatch_{};
  std::vector<std::uint32_t> path_;
  std::uint64_t nodes_ = 0;
};

Circuit circuit_from_codes(int lines, const std::vector<std::uint32_t>& codes) {
  Circuit c(lines);
  for (auto code : codes) c.append(decode({lines, code}));
  return c;
}

// Bound-k search split by first gate across workers. Every first gate's
// subtree yields its own lexicographic minimum; the smallest first gate with
// a solution wins, so the answer does not depend on scheduling.
std::optional<std::vector<std::uint32_t>> search_bound_parallel(SearchContext& ctx, int bound,
                                                                int threads,
                                                                std::uint64_t& nodes) {
  const auto gate_count = static_cast<std::uint32_t>(ctx.gates.size());
  std::atomic<std::uint32_t> next{0};
  std::atomic<std::uint32_t> best{std::numeric_limits<std::uint32_t>::max()};
  std::mutex mutex;
  std::vector<std::uint32_t> best_path;
  std::atomic<std::uint64_t> total_nodes{0};

  auto worker = [&] {
    Searcher s(ctx);
    const int h = s.lower_bound();
    for (;;) {
      const std::uint32_t first = next.fetch_add(1);
      if (first >= gate_count || first > best.load()) break;
      if (ctx.stop.load()) break;
      if (h > bound) break;
      s.reset();
      if (s.try_gate(first, bound, -1)) {
        std::lock_guard lock(mutex);
        if (first < best.load()) {
          best.store(first);
          best_path = s.path();
        }
      }
    }
    total_nodes += s.nodes();
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  nodes += total_nodes.load();
  if (best.load() == std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return best_path;
}

SynthesisResult synthesize_iddfs(const SynthesisRequest& request) {
  const auto start = Clock::now();
  const int n = request.goal.lines();
  SearchContext ctx;
  ctx.lines = n;
  ctx.full = static_cast<Word>((std::uint64_t{1} << n) - 1);
  ctx.goal.assign(request.goal.map().begin(), request.goal.map().end());
  for (const auto& g : enumerate_gates(n)) {
    ctx.gates.push_back({g.target_mask(), g.control_mask(),
                         ctx.full & ~g.target_mask() & ~g.control_mask()});
  }
  if (request.timeout_seconds) {
    ctx.deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*request.timeout_seconds));
  }

  SynthesisResult result;
  Searcher serial(ctx);
  const int threads = std::max(1, request.threads);
  for (int bound = 0; bound <= request.max_bound; ++bound) {
    std::optional<std::vector<std::uint32_t>> found;
    if (threads == 1 || bound == 0) {
      serial.reset();
      if (serial.search(bound, -1)) found = serial.path();
    } else {
      found = search_bound_parallel(ctx, bound, threads, result.nodes_explored);
    }
    if (ctx.stop.load()) {
      result.status = Status::timed_out;
      break;
    }
    if (found) {
      result.status = Status::solved;
      result.circuit = circuit_from_codes(n, *found);
      result.gc = result.circuit->gate_count();
      result.qc = result.circuit->quantum_cost();
      result.bound_reached = bound;
      break;
    }
    result.bound_reached = bound;
  }
  result.nodes_explored += serial.nodes();
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace

SynthesisResult synthesize(const SynthesisRequest& request) {
  if (request.max_bound < 0) {
    throw Error(ErrorKind::configuration, "max bound must be non-negative");
  }
  switch (request.engine) {
    case Engine::iddfs:
      return synthesize_iddfs(request);
    case Engine::bfs: {
      const auto start = Clock::now();
      auto result = bfs_oracle(request.goal, request.max_bound, request.max_states);
      result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return result;
    }
    case Engine::smv:
      return detail::synthesize_with_checker(request);
  }
  throw Error(ErrorKind::configuration, "unknown engine");
}

}  // namespace mctsynth
