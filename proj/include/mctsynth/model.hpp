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

// Value types for reversible functions on n lines: permutations of the
// 2^n input words, Multiple-Control Toffoli (MCT) gates, and gate cascades.
//
// Line numbering: line 0 is the topmost circuit line and corresponds to the
// most significant bit of a word. With that convention a CNOT controlled by
// line 0 targeting line 1 on two lines realizes {0, 1, 3, 2}.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mctsynth {

using Word = std::uint32_t;

inline constexpr int kMinLines = 1;
inline constexpr int kMaxLines = 16;

/// Throws a range error unless kMinLines <= lines <= kMaxLines.
void check_lines(int lines);

/// Word bit that carries `line`.
constexpr Word line_bit(int lines, int line) noexcept {
  return Word{1} << (lines - 1 - line);
}

/// A bijection on {0, ..., 2^n - 1}; `at(i)` is the output word for input i.
class Permutation {
 public:
  /// Validates bijectivity and length; throws length or validation errors.
  Permutation(int lines, std::vector<Word> map);

  static Permutation identity(int lines);

  int lines() const noexcept { return lines_; }
  std::size_t size() const noexcept { return map_.size(); }
  Word at(std::size_t word) const { return map_.at(word); }
  Word operator[](std::size_t word) const noexcept { return map_[word]; }
  std::span<const Word> map() const noexcept { return map_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  std::string to_string() const;  // "0,1,3,2"

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, int lines, std::vector<Word> map) noexcept
      : lines_(lines), map_(std::move(map)) {}

  int lines_;
  std::vector<Word> map_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend class MctGate;
};

/// Cascade composition: the result applies `first`, then `second`.
Permutation compose(const Permutation& first, const Permutation& second);

/// One Multiple-Control Toffoli gate. The target line is inverted iff every
/// control line carries 1. No controls is a NOT, one is a CNOT, two a Toffoli.
class MctGate {
 public:
  /// Throws a range error for bad line indices or a target among controls.
  MctGate(int lines, int target, std::span<const int> controls = {});
  MctGate(int lines, int target, std::initializer_list<int> controls)
      : MctGate(lines, target, std::span<const int>(controls.begin(), controls.size())) {}

  /// Builds from word masks without the per-line validation (both masks must
  /// already be consistent with `lines`).
  static MctGate from_masks(int lines, Word target_mask, Word control_mask);

  int lines() const noexcept { return lines_; }
  int target() const noexcept { return target_; }
  Word target_mask() const noexcept { return line_bit(lines_, target_); }
  Word control_mask() const noexcept { return control_mask_; }
  std::size_t control_count() const noexcept;
  bool has_control(int line) const noexcept {
    return (control_mask_ & line_bit(lines_, line)) != 0;
  }
  /// Control lines, ascending.
  std::vector<int> controls() const;

  Word apply(Word word) const noexcept {
    return (word & control_mask_) == control_mask_ ? word ^ target_mask() : word;
  }

  Permutation to_permutation() const;

  friend bool operator==(const MctGate&, const MctGate&) = default;

 private:
  MctGate() = default;

  int lines_ = 0;
  int target_ = 0;
  Word control_mask_ = 0;
};

Permutation gate_to_permutation(const MctGate& gate);

/// Elementary-gate cost of one gate: 1 for NOT and CNOT, 2^(c+1) - 3 for c >= 2
/// controls.
std::uint64_t gate_cost(const MctGate& gate) noexcept;

/// Ordered gate cascade; gates()[0] acts first on the input word.
class Circuit {
 public:
  explicit Circuit(int lines);
  Circuit(int lines, std::vector<MctGate> gates);

  int lines() const noexcept { return lines_; }
  const std::vector<MctGate>& gates() const noexcept { return gates_; }
  bool empty() const noexcept { return gates_.empty(); }

  void append(const MctGate& gate);

  std::size_t gate_count() const noexcept { return gates_.size(); }
  std::uint64_t quantum_cost() const noexcept;

  Word apply(Word word) const noexcept;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int lines_;
  std::vector<MctGate> gates_;
};

Permutation circuit_to_permutation(const Circuit& circuit);

}  // namespace mctsynth
