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

#include <sstream>

#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"
#include "mctsynth/smv.hpp"

namespace mctsynth::smv {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Index of a gate-bit name "g<k>", or -1.
int gate_bit_index(std::string_view name) {
  if (name.size() < 2 || name[0] != 'g') return -1;
  int value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return -1;
    value = value * 10 + (name[i] - '0');
    if (value > 1000) return -1;
  }
  return value;
}

}  // namespace

Trace parse_trace_steps(std::string_view raw, int lines) {
  check_lines(lines);
  const int bits = code_width(lines);

  struct Frame {
    std::vector<int> values;  // -1 unknown
    bool assigned = false;
    int line = 0;
  };
  std::vector<Frame> frames;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    auto end = raw.find('\n', pos);
    if (end == std::string_view::npos) end = raw.size();
    const auto line = trim(raw.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    if (line.starts_with("-> State:")) {
      Frame f;
      f.values = frames.empty() ? std::vector<int>(static_cast<std::size_t>(bits), -1)
                                : frames.back().values;
      f.line = line_no;
      frames.push_back(std::move(f));
      continue;
    }
    if (frames.empty() || line.starts_with("->") || line.starts_with("--")) continue;
    const auto eq = line.find(" = ");
    if (eq == std::string_view::npos) continue;
    const auto name = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 3));
    frames.back().assigned = true;
    const int index = gate_bit_index(name);
    if (index < 0) continue;
    if (index >= bits) {
      throw Error(ErrorKind::parse, "trace line " + std::to_string(line_no) + ": " +
                                        std::string(name) + " is not a gate bit for " +
                                        std::to_string(lines) + " lines");
    }
    if (value == "TRUE" || value == "1") {
      frames.back().values[static_cast<std::size_t>(index)] = 1;
    } else if (value == "FALSE" || value == "0") {
      frames.back().values[static_cast<std::size_t>(index)] = 0;
    } else {
      throw Error(ErrorKind::parse, "trace line " + std::to_string(line_no) +
                                        ": bad value '" + std::string(value) + "'");
    }
  }

  // A frame after the first that assigns nothing repeats its predecessor;
  // every gate changes the state, so it cannot be a real step.
  std::vector<Frame> kept;
  for (auto& f : frames) {
    if (!kept.empty() && !f.assigned) continue;
    kept.push_back(std::move(f));
  }

  Trace trace;
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    std::vector<bool> step;
    for (int b = 0; b < bits; ++b) {
      const int v = kept[i].values[static_cast<std::size_t>(b)];
      if (v < 0) {
        throw Error(ErrorKind::parse, "trace step " + std::to_string(i) + " (line " +
                                          std::to_string(kept[i].line) + "): " +
                                          gate_bit_name(b) + " has no value");
      }
      step.push_back(v == 1);
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

Circuit trace_to_circuit(const Trace& trace, int lines) {
  Circuit c(lines);
  const int bits = code_width(lines);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    if (static_cast<int>(step.size()) != bits) {
      throw Error(ErrorKind::parse, "trace step " + std::to_string(i) + " has " +
                                        std::to_string(step.size()) + " gate bits, expected " +
                                        std::to_string(bits));
    }
    std::uint32_t code = 0;
    for (bool b : step) code = (code << 1) | (b ? 1u : 0u);
    try {
      c.append(decode({lines, code}));
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, "trace step " + std::to_string(i) + ": " + e.what());
    }
  }
  return c;
}

Circuit parse_trace(std::string_view raw, int lines) {
  return trace_to_circuit(parse_trace_steps(raw, lines), lines);
}

std::string render_trace(const Circuit& circuit) {
  const int n = circuit.lines();
  const int bits = code_width(n);
  const bool with_states = n <= kMaxEmitLines;
  const std::size_t words = std::size_t{1} << n;

  std::map<std::string, bool> previous;
  std::vector<Word> state(words);
  for (std::size_t w = 0; w < words; ++w) state[w] = static_cast<Word>(w);
  const auto goal = circuit_to_permutation(circuit);

  std::ostringstream out;
  out << "-- specification !(F goal)  is false\n";
  out << "-- as demonstrated by the following execution sequence\n";
  out << "Trace Description: BMC Counterexample \n";
  out << "Trace Type: Counterexample \n";
  const auto& gates = circuit.gates();
  std::uint32_t code = 0;
  for (std::size_t step = 0; step <= gates.size(); ++step) {
    if (step < gates.size()) code = encode(gates[step]).bits;
    std::vector<std::pair<std::string, bool>> vars;
    for (int b = 0; b < bits; ++b) {
      vars.emplace_back(gate_bit_name(b), (code >> (bits - 1 - b)) & 1u);
    }
    if (with_states) {
      for (std::size_t w = 0; w < words; ++w) {
        for (int line = 0; line < n; ++line) {
          vars.emplace_back(state_bit_name(static_cast<Word>(w), line),
                            (state[w] & line_bit(n, line)) != 0);
        }
      }
    }
    bool reached = true;
    for (std::size_t w = 0; w < words; ++w) reached = reached && state[w] == goal[w];
    vars.emplace_back("goal", reached);

    out << "  -> State: 1." << step + 1 << " <-\n";
    for (const auto& [name, value] : vars) {
      const auto it = previous.find(name);
      if (step == 0 || it == previous.end() || it->second != value) {
        out << "    " << name << " = " << (value ? "TRUE" : "FALSE") << "\n";
      }
      previous[name] = value;
    }
    if (step < gates.size()) {
      for (auto& v : state) v = gates[step].apply(v);
    }
  }
  return out.str();
}

}  // namespace mctsynth::smv
