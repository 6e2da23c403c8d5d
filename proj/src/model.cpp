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

#include "mctsynth/model.hpp"

#include <bit>
#include <numeric>
#include <sstream>

#include "mctsynth/errors.hpp"

namespace mctsynth {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::range: return "range error";
    case ErrorKind::dimension: return "dimension error";
    case ErrorKind::validation: return "validation error";
    case ErrorKind::length: return "length error";
    case ErrorKind::invalid_code: return "invalid gate code";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::resource: return "resource error";
    case ErrorKind::execution: return "execution error";
    case ErrorKind::configuration: return "configuration error";
    case ErrorKind::io: return "i/o error";
  }
  return "error";
}

void check_lines(int lines) {
  if (lines < kMinLines || lines > kMaxLines) {
    throw Error(ErrorKind::range, "line count " + std::to_string(lines) +
                                      " outside supported range [" +
                                      std::to_string(kMinLines) + ", " +
                                      std::to_string(kMaxLines) + "]");
  }
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(int lines, std::vector<Word> map) : lines_(lines) {
  check_lines(lines);
  const std::size_t expected = std::size_t{1} << lines;
  if (map.size() != expected) {
    throw Error(ErrorKind::length, "permutation on " + std::to_string(lines) +
                                       " lines needs " + std::to_string(expected) +
                                       " entries, got " + std::to_string(map.size()));
  }
  std::vector<std::size_t> first_seen(expected, expected);
  for (std::size_t i = 0; i < map.size(); ++i) {
    const Word value = map[i];
    if (value >= expected) {
      throw Error(ErrorKind::validation, "entry " + std::to_string(i) + " = " +
                                             std::to_string(value) + " is out of range");
    }
    if (first_seen[value] != expected) {
      throw Error(ErrorKind::validation,
                  "value " + std::to_string(value) + " duplicated at indices " +
                      std::to_string(first_seen[value]) + " and " + std::to_string(i));
    }
    first_seen[value] = i;
  }
  map_ = std::move(map);
}

Permutation Permutation::identity(int lines) {
  check_lines(lines);
  std::vector<Word> map(std::size_t{1} << lines);
  std::iota(map.begin(), map.end(), Word{0});
  return Permutation(Unchecked{}, lines, std::move(map));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Word> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = static_cast<Word>(i);
  return Permutation(Unchecked{}, lines_, std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i) out << ',';
    out << map_[i];
  }
  return out.str();
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.lines() != second.lines()) {
    throw Error(ErrorKind::dimension, "cannot compose permutations on " +
                                          std::to_string(first.lines()) + " and " +
                                          std::to_string(second.lines()) + " lines");
  }
  std::vector<Word> map(first.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second.map_[first.map_[i]];
  return Permutation(Permutation::Unchecked{}, first.lines(), std::move(map));
}

// ---------------------------------------------------------------------------
// MctGate

MctGate::MctGate(int lines, int target, std::span<const int> controls)
    : lines_(lines), target_(target) {
  check_lines(lines);
  if (target < 0 || target >= lines) {
    throw Error(ErrorKind::range, "target line " + std::to_string(target) +
                                      " out of range for " + std::to_string(lines) +
                                      " lines");
  }
  for (int c : controls) {
    if (c < 0 || c >= lines) {
      throw Error(ErrorKind::range, "control line " + std::to_string(c) +
                                        " out of range for " + std::to_string(lines) +
                                        " lines");
    }
    if (c == target) {
      throw Error(ErrorKind::range,
                  "line " + std::to_string(c) + " is both target and control");
    }
    if (control_mask_ & line_bit(lines, c)) {
      throw Error(ErrorKind::range, "control line " + std::to_string(c) + " listed twice");
    }
    control_mask_ |= line_bit(lines, c);
  }
}

MctGate MctGate::from_masks(int lines, Word target_mask, Word control_mask) {
  MctGate g;
  g.lines_ = lines;
  g.target_ = lines - 1 - std::countr_zero(target_mask);
  g.control_mask_ = control_mask;
  return g;
}

std::size_t MctGate::control_count() const noexcept {
  return static_cast<std::size_t>(std::popcount(control_mask_));
}

std::vector<int> MctGate::controls() const {
  std::vector<int> out;
  for (int line = 0; line < lines_; ++line) {
    if (has_control(line)) out.push_back(line);
  }
  return out;
}

Permutation MctGate::to_permutation() const {
  std::vector<Word> map(std::size_t{1} << lines_);
  for (std::size_t w = 0; w < map.size(); ++w) map[w] = apply(static_cast<Word>(w));
  return Permutation(Permutation::Unchecked{}, lines_, std::move(map));
}

Permutation gate_to_permutation(const MctGate& gate) { return gate.to_permutation(); }

std::uint64_t gate_cost(const MctGate& gate) noexcept {
  const auto c = gate.control_count();
  if (c <= 1) return 1;
  return (std::uint64_t{1} << (c + 1)) - 3;
}

// ---------------------------------------------------------------------------
// Circuit

Circuit::Circuit(int lines) : lines_(lines) { check_lines(lines); }

Circuit::Circuit(int lines, std::vector<MctGate> gates) : Circuit(lines) {
  for (const auto& g : gates) append(g);
}

void Circuit::append(const MctGate& gate) {
  if (gate.lines() != lines_) {
    throw Error(ErrorKind::dimension, "gate on " + std::to_string(gate.lines()) +
                                          " lines appended to a circuit on " +
                                          std::to_string(lines_) + " lines");
  }
  gates_.push_back(gate);
}

std::uint64_t Circuit::quantum_cost() const noexcept {
  std::uint64_t total = 0;
  for (const auto& g : gates_) total += gate_cost(g);
  return total;
}

Word Circuit::apply(Word word) const noexcept {
  for (const auto& g : gates_) word = g.apply(word);
  return word;
}

Permutation circuit_to_permutation(const Circuit& circuit) {
  auto result = Permutation::identity(circuit.lines());
  for (const auto& g : circuit.gates()) result = compose(result, gate_to_permutation(g));
  return result;
}

}  // namespace mctsynth
