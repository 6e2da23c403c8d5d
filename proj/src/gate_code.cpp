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

#include "mctsynth/gate_code.hpp"

#include "mctsynth/errors.hpp"

namespace mctsynth {

namespace {

// Line addressed by control flag j of a gate with the given target.
int flag_line(int flag, int target) noexcept { return flag < target ? flag : flag + 1; }

bool word_bit(int lines, Word word, int line) noexcept {
  return (word & line_bit(lines, line)) != 0;
}

}  // namespace

int target_field_width(int lines) noexcept {
  int width = 0;
  while ((1 << width) < lines) ++width;
  return width;
}

int code_width(int lines) noexcept { return target_field_width(lines) + lines - 1; }

std::string GateCode::to_string() const {
  const int width = code_width(lines);
  std::string out(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if (bits & (std::uint32_t{1} << (width - 1 - i))) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

GateCode encode(const MctGate& gate) {
  const int n = gate.lines();
  const int flags = n - 1;
  std::uint32_t bits = static_cast<std::uint32_t>(gate.target()) << flags;
  for (int j = 0; j < flags; ++j) {
    if (gate.has_control(flag_line(j, gate.target()))) {
      bits |= std::uint32_t{1} << (flags - 1 - j);
    }
  }
  return {n, bits};
}

MctGate decode(const GateCode& code) {
  const int n = code.lines;
  check_lines(n);
  const int width = code_width(n);
  if (width < 32 && code.bits >> width) {
    throw Error(ErrorKind::range, "code " + std::to_string(code.bits) + " exceeds " +
                                      std::to_string(width) + " bits");
  }
  const int flags = n - 1;
  const int target = static_cast<int>(code.bits >> flags);
  if (target >= n) {
    throw Error(ErrorKind::invalid_code, "code " + code.to_string() + " selects target line " +
                                             std::to_string(target) + " on " +
                                             std::to_string(n) + " lines");
  }
  std::vector<int> controls;
  for (int j = 0; j < flags; ++j) {
    if (code.bits & (std::uint32_t{1} << (flags - 1 - j))) {
      controls.push_back(flag_line(j, target));
    }
  }
  return MctGate(n, target, controls);
}

std::vector<MctGate> enumerate_gates(int lines) {
  check_lines(lines);
  const int flags = lines - 1;
  std::vector<MctGate> gates;
  gates.reserve(static_cast<std::size_t>(lines) << flags);
  // Codes with target field >= n are skipped; they only exist when n is not
  // a power of two and always sort after every valid code.
  for (std::uint32_t target = 0; target < static_cast<std::uint32_t>(lines); ++target) {
    for (std::uint32_t ctl = 0; ctl < (std::uint32_t{1} << flags); ++ctl) {
      gates.push_back(decode({lines, (target << flags) | ctl}));
    }
  }
  return gates;
}

Word apply_gate(Word word, const MctGate& gate) {
  const int n = gate.lines();
  const int tg = gate.target();
  const GateCode code = encode(gate);
  const int flags = n - 1;
  bool fire = true;
  for (int j = 0; j < flags; ++j) {
    const bool c_j = (code.bits >> (flags - 1 - j)) & 1u;
    fire = fire && (!c_j || word_bit(n, word, flag_line(j, tg)));
  }
  Word next = 0;
  for (int k = 0; k < n; ++k) {
    bool bit = word_bit(n, word, k);
    if (k == tg) bit = bit != fire;
    if (bit) next |= line_bit(n, k);
  }
  return next;
}

}  // namespace mctsynth
