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

// SMV model generation for an external symbolic model checker, plus the
// pieces needed to read its answer back.
//
// The emitted model composes two parts synchronously: gate-selection bits
// g0..g{k-1} (g0 is the msb of the gate code) that may flip or keep their value
// at every step, and 2^n transition instances, one per input word w, whose
// state bits s{w}_{i} (line i) start at the bits of w and follow the MCT
// next-state relation under the currently selected gate. The single spec
// claims the goal permutation is never reached, so a counterexample is a gate
// sequence realizing it.

#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mctsynth/model.hpp"

namespace mctsynth::smv {

enum class SpecLogic { ltl, ctl };

const char* to_string(SpecLogic logic) noexcept;
SpecLogic spec_logic_from_string(std::string_view text);

inline constexpr int kMaxEmitLines = 8;

struct Model {
  int lines = 0;
  Permutation goal = Permutation::identity(1);
  SpecLogic logic = SpecLogic::ltl;
  std::string text;
};

std::string gate_bit_name(int index);
std::string state_bit_name(Word word, int line);

/// Throws a range error unless 1 <= n <= kMaxEmitLines.
Model emit_model(const Permutation& goal, SpecLogic logic);

// ---------------------------------------------------------------------------
// Counterexample traces

/// Gate-bit valuations, one per transition, g0 first.
struct Trace {
  std::vector<std::vector<bool>> steps;
};

/// Reads a checker counterexample. Values persist across frames until
/// reassigned; the last frame carries no transition and is dropped.
Trace parse_trace_steps(std::string_view raw, int lines);

/// Decodes each step; a step with an invalid code is a parse error naming it.
Circuit trace_to_circuit(const Trace& trace, int lines);

Circuit parse_trace(std::string_view raw, int lines);

/// Renders a counterexample for `circuit` in the checker's textual layout,
/// printing only changed variables after the first frame.
std::string render_trace(const Circuit& circuit);

// ---------------------------------------------------------------------------
// Expression subset used by emitted models

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { constant, variable, negate, conj, disj, exclusive, choice };
  Op op = Op::constant;
  bool value = false;                // constant
  std::string name;                  // variable
  std::vector<ExprPtr> operands;     // negate/conj/disj/exclusive
  std::vector<std::pair<ExprPtr, ExprPtr>> cases;  // choice: condition -> value
};

ExprPtr parse_expression(std::string_view text);

using Valuation = std::map<std::string, bool, std::less<>>;

/// Throws a parse error for a variable missing from `env` or a case without a
/// matching branch.
bool evaluate(const Expr& expr, const Valuation& env);

/// The emitted model read back into its parts.
struct ParsedModel {
  std::vector<std::string> variables;
  std::map<std::string, ExprPtr, std::less<>> defines;
  std::map<std::string, ExprPtr, std::less<>> init;
  std::map<std::string, ExprPtr, std::less<>> next;  // deterministic assignments
  std::vector<std::string> free_next;                 // next(x) := {x, !x}
  std::vector<ExprPtr> invariants;
  SpecLogic logic = SpecLogic::ltl;
  std::string spec_target;  // the define named inside !(F ...) / !(EF ...)
};

ParsedModel parse_model(std::string_view text);

// ---------------------------------------------------------------------------
// External checker

struct CheckerOptions {
  /// Command template; `{model}` and `{bound}` are substituted. Empty means
  /// default_checker_command().
  std::string command;
  std::chrono::duration<double> timeout{std::chrono::hours(24)};
  /// Directory for model files; the system temp directory when empty.
  std::filesystem::path work_dir;
};

/// `$MCTSYNTH_NUSMV` (or `NuSMV`) in bounded mode for LTL; plain invocation for
/// CTL, whose checking is not bounded.
std::string default_checker_command(SpecLogic logic);

/// True when a checker was requested explicitly or `$MCTSYNTH_NUSMV` is set.
bool checker_configured(const CheckerOptions& options);

struct CheckOutcome {
  bool falsified = false;  // false means the spec was proven at this bound
  Trace trace;
  std::string output;
};

/// Runs the checker on `model` at `bound`. Throws ErrorKind::execution when
/// the command cannot run, times out, or prints no verdict.
CheckOutcome run_external(const Model& model, const CheckerOptions& options, int bound);

}  // namespace mctsynth::smv
