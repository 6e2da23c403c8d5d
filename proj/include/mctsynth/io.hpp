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

// Text formats: synthesis problems, `.real` netlists, and result reports.
//
// Problem file:
//
//   # optional comments and blank lines
//   name=peres          (optional)
//   n=3
//   perm=0,3,2,5,4,7,6,1
//
// `.real` output is the RevLib subset with MCT gates only: `t<k>` lines list
// the k-1 controls in ascending line order followed by the target.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mctsynth/model.hpp"

namespace mctsynth {

struct ProblemFile {
  std::string name;
  Permutation goal;
};

/// Throws parse, length, validation or range errors.
ProblemFile parse_problem(std::string_view text);
std::string render_problem(const ProblemFile& problem);

std::string write_real(const Circuit& circuit);

/// Throws parse errors carrying the 1-based line number.
Circuit read_real(std::string_view text);

/// One gate in `.real` body syntax, e.g. "t3 x0 x1 x2".
std::string gate_to_real(const MctGate& gate);

struct ResultReport {
  std::string name;
  int lines = 0;
  std::size_t gc = 0;
  std::uint64_t qc = 0;
  double elapsed_seconds = 0.0;
  std::string engine;
  std::string status;  // e.g. solved, PASS, TIMEOUT
  std::vector<std::string> gates;

  static ResultReport from_circuit(std::string name, const Circuit& circuit,
                                   double elapsed_seconds, std::string engine,
                                   std::string status);
};

enum class ReportFormat { table, json_lines };

ReportFormat report_format_from_string(std::string_view text);

/// Columns: name, n, GC, QC, time, then engine and status. JSON lines carry
/// the same fields plus the gate list.
std::string write_report(const std::vector<ResultReport>& results, ReportFormat format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace mctsynth
