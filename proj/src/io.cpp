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

#include "mctsynth/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mctsynth/errors.hpp"

namespace mctsynth {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const auto b = line.find_first_not_of(" \t", pos);
    if (b == std::string_view::npos) break;
    auto e = line.find_first_of(" \t", b);
    if (e == std::string_view::npos) e = line.size();
    out.push_back(line.substr(b, e - b));
    pos = e;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

// ---------------------------------------------------------------------------
// Problem files

ProblemFile parse_problem(std::string_view text) {
  std::optional<int> lines;
  std::optional<std::vector<Word>> perm;
  std::string name;
  const auto all = split_lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto line = trim(all[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_fail(i + 1, "expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "n") {
      int n = 0;
      if (!parse_number(value, n)) parse_fail(i + 1, "n is not an integer");
      check_lines(n);
      lines = n;
    } else if (key == "perm") {
      std::vector<Word> entries;
      std::size_t pos = 0;
      while (pos <= value.size()) {
        auto comma = value.find(',', pos);
        if (comma == std::string_view::npos) comma = value.size();
        Word w = 0;
        if (!parse_number(value.substr(pos, comma - pos), w)) {
          parse_fail(i + 1, "entry " + std::to_string(entries.size()) + " is not a number");
        }
        entries.push_back(w);
        pos = comma + 1;
      }
      perm = std::move(entries);
    } else if (key == "name") {
      name = std::string(value);
    } else {
      parse_fail(i + 1, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!lines) throw Error(ErrorKind::parse, "problem is missing n=");
  if (!perm) throw Error(ErrorKind::parse, "problem is missing perm=");
  return ProblemFile{std::move(name), Permutation(*lines, std::move(*perm))};
}

std::string render_problem(const ProblemFile& problem) {
  std::string out;
  if (!problem.name.empty()) out += "name=" + problem.name + "\n";
  out += "n=" + std::to_string(problem.goal.lines()) + "\n";
  out += "perm=" + problem.goal.to_string() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// .real netlists

std::string gate_to_real(const MctGate& gate) {
  std::string out = "t" + std::to_string(gate.control_count() + 1);
  for (int c : gate.controls()) out += " x" + std::to_string(c);
  out += " x" + std::to_string(gate.target());
  return out;
}

std::string write_real(const Circuit& circuit) {
  const int n = circuit.lines();
  std::string vars;
  for (int i = 0; i < n; ++i) vars += (i ? " x" : "x") + std::to_string(i);
  std::string out = ".version 1.0\n";
  out += ".numvars " + std::to_string(n) + "\n";
  out += ".variables " + vars + "\n";
  out += ".inputs " + vars + "\n";
  out += ".outputs " + vars + "\n";
  out += ".begin\n";
  for (const auto& g : circuit.gates()) out += gate_to_real(g) + "\n";
  out += ".end\n";
  return out;
}

Circuit read_real(std::string_view text) {
  std::optional<int> numvars;
  std::map<std::string, int, std::less<>> variables;
  std::optional<Circuit> circuit;
  bool ended = false;
  const auto all = split_lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto line = trim(all[i]);
    if (line.empty() || line.front() == '#') continue;
    if (ended) parse_fail(line_no, "content after .end");
    const auto words = split_words(line);
    const auto head = words.front();
    if (head.front() == '.') {
      if (head == ".numvars") {
        int n = 0;
        if (words.size() != 2 || !parse_number(words[1], n)) parse_fail(line_no, "bad .numvars");
        try {
          check_lines(n);
        } catch (const Error& e) {
          parse_fail(line_no, e.what());
        }
        numvars = n;
      } else if (head == ".variables") {
        if (!numvars) parse_fail(line_no, ".variables before .numvars");
        if (static_cast<int>(words.size()) - 1 != *numvars) {
          parse_fail(line_no, ".variables lists " + std::to_string(words.size() - 1) +
                                  " names, .numvars says " + std::to_string(*numvars));
        }
        for (std::size_t k = 1; k < words.size(); ++k) {
          if (!variables.emplace(std::string(words[k]), static_cast<int>(k - 1)).second) {
            parse_fail(line_no, "variable '" + std::string(words[k]) + "' declared twice");
          }
        }
      } else if (head == ".begin") {
        if (!numvars || variables.empty()) parse_fail(line_no, ".begin before .variables");
        circuit.emplace(*numvars);
      } else if (head == ".end") {
        if (!circuit) parse_fail(line_no, ".end without .begin");
        ended = true;
      } else if (head == ".version" || head == ".inputs" || head == ".outputs" ||
                 head == ".constants" || head == ".garbage" || head == ".define") {
        // header information with no bearing on the cascade
      } else {
        parse_fail(line_no, "unknown directive '" + std::string(head) + "'");
      }
      continue;
    }
    if (!circuit) parse_fail(line_no, "gate outside .begin/.end");
    std::size_t arity = 0;
    if (head.size() < 2 || head[0] != 't' || !parse_number(head.substr(1), arity) || arity == 0) {
      parse_fail(line_no, "unknown gate '" + std::string(head) + "'");
    }
    if (words.size() - 1 != arity) {
      parse_fail(line_no, "gate " + std::string(head) + " expects " + std::to_string(arity) +
                              " lines, got " + std::to_string(words.size() - 1));
    }
    std::vector<int> lines;
    for (std::size_t k = 1; k < words.size(); ++k) {
      const auto it = variables.find(words[k]);
      if (it == variables.end()) {
        parse_fail(line_no, "undeclared variable '" + std::string(words[k]) + "'");
      }
      lines.push_back(it->second);
    }
    const int target = lines.back();
    lines.pop_back();
    for (int c : lines) {
      if (c == target) parse_fail(line_no, "target line listed among controls");
    }
    for (std::size_t a = 0; a < lines.size(); ++a) {
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        if (lines[a] == lines[b]) parse_fail(line_no, "control line listed twice");
      }
    }
    circuit->append(MctGate(*numvars, target, lines));
  }
  if (!circuit) throw Error(ErrorKind::parse, "netlist has no .begin section");
  if (!ended) throw Error(ErrorKind::parse, "netlist is missing .end");
  return *circuit;
}

// ---------------------------------------------------------------------------
// Reports

ResultReport ResultReport::from_circuit(std::string name, const Circuit& circuit,
                                        double elapsed_seconds, std::string engine,
                                        std::string status) {
  ResultReport r;
  r.name = std::move(name);
  r.lines = circuit.lines();
  r.gc = circuit.gate_count();
  r.qc = circuit.quantum_cost();
  r.elapsed_seconds = elapsed_seconds;
  r.engine = std::move(engine);
  r.status = std::move(status);
  for (const auto& g : circuit.gates()) r.gates.push_back(gate_to_real(g));
  return r;
}

ReportFormat report_format_from_string(std::string_view text) {
  if (text == "table") return ReportFormat::table;
  if (text == "json" || text == "json-lines" || text == "jsonl") return ReportFormat::json_lines;
  throw Error(ErrorKind::configuration, "unknown report format '" + std::string(text) + "'");
}

namespace {

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string write_report(const std::vector<ResultReport>& results, ReportFormat format) {
  if (format == ReportFormat::json_lines) {
    std::string out;
    for (const auto& r : results) {
      nlohmann::ordered_json j;
      j["name"] = r.name;
      j["n"] = r.lines;
      j["gc"] = r.gc;
      j["qc"] = r.qc;
      j["time"] = std::stod(fixed3(r.elapsed_seconds));
      j["engine"] = r.engine;
      j["status"] = r.status;
      j["gates"] = r.gates;
      out += j.dump() + "\n";
    }
    return out;
  }

  const std::vector<std::string> header = {"name", "n", "GC", "QC", "time(s)", "engine", "status"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) {
    rows.push_back({r.name, std::to_string(r.lines), std::to_string(r.gc), std::to_string(r.qc),
                    fixed3(r.elapsed_seconds), r.engine, r.status});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const bool left = c == 0 || c >= 5;
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c) line += "  ";
      line += left ? row[c] + pad : pad + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + "\n";
  };
  std::string out = emit(header);
  for (const auto& row : rows) out += emit(row);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path);
  out << text;
}

}  // namespace mctsynth
