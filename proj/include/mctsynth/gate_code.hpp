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

// Fixed-width bit encoding of MCT gates.
//
// A gate on n lines is packed into ceil(log2 n) + n - 1 bits. The high
// ceil(log2 n) bits hold the target line. Each of the remaining n - 1 bits is
// a control flag: flag j refers to line j when j < target and to line j + 1
// otherwise, so the target line itself is skipped. Flag 0 is the most
// significant control bit. Example (n = 4): target 0 with controls on lines
// 2 and 3 encodes as 00|011.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mctsynth/model.hpp"

namespace mctsynth {

/// ceil(log2 n); zero for n = 1.
int target_field_width(int lines) noexcept;

/// ceil(log2 n) + n - 1.
int code_width(int lines) noexcept;

struct GateCode {
  int lines = 0;
  std::uint32_t bits = 0;

  /// The code rendered msb first, e.g. "00011". Empty for n = 1.
  std::string to_string() const;

  friend auto operator<=>(const GateCode&, const GateCode&) = default;
};

GateCode encode(const MctGate& gate);

/// Throws ErrorKind::invalid_code if the target field is >= n and
/// ErrorKind::range if bits exceed the code width.
MctGate decode(const GateCode& code);

/// All n * 2^(n-1) gates, ascending by code.
std::vector<MctGate> enumerate_gates(int lines);

/// Evaluates the word-level next-state relation of a gate bit by bit: the
/// target bit is XORed with AND_j (!c_j | i_l), every other bit is kept.
Word apply_gate(Word word, const MctGate& gate);

}  // namespace mctsynth
