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

#include "mctsynth/mctsynth.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <optional>
#include <string>

#include "mctsynth/bench.hpp"
#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"
#include "mctsynth/io.hpp"
#include "mctsynth/smv.hpp"
#include "mctsynth/synth.hpp"

struct mct_permutation {
  mctsynth::Permutation value;
};

struct mct_circuit {
  mctsynth::Circuit value;
};

struct mct_result {
  mctsynth::SynthesisResult value;
  std::optional<mct_circuit> circuit;
};

struct mct_report {
  std::vector<mctsynth::ResultReport> rows;
};

namespace {

using namespace mctsynth;

thread_local std::string last_error;

mct_status status_of(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::range: return MCT_ERR_RANGE;
    case ErrorKind::dimension: return MCT_ERR_DIMENSION;
    case ErrorKind::validation: return MCT_ERR_VALIDATION;
    case ErrorKind::length: return MCT_ERR_LENGTH;
    case ErrorKind::invalid_code: return MCT_ERR_INVALID_CODE;
    case ErrorKind::parse: return MCT_ERR_PARSE;
    case ErrorKind::resource: return MCT_ERR_RESOURCE;
    case ErrorKind::execution: return MCT_ERR_EXECUTION;
    case ErrorKind::configuration: return MCT_ERR_CONFIGURATION;
    case ErrorKind::io: return MCT_ERR_IO;
  }
  return MCT_ERR_INTERNAL;
}

struct ArgumentError {
  const char* what;
};

template <typename F>
mct_status guarded(F&& body) noexcept {
  try {
    body();
    last_error.clear();
    return MCT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const ArgumentError& e) {
    last_error = e.what;
    return MCT_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MCT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MCT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return MCT_ERR_INTERNAL;
  }
}

template <typename T>
const T& deref(const T* p, const char* what) {
  if (!p) throw ArgumentError{what};
  return *p;
}

template <typename T>
T& deref_out(T* p, const char* what) {
  if (!p) throw ArgumentError{what};
  return *p;
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mct_gate_info info_of(const MctGate& g) {
  mct_gate_info info{};
  info.code = encode(g).bits;
  info.code_width = code_width(g.lines());
  info.target = g.target();
  for (int c : g.controls()) info.control_lines |= 1u << c;
  info.cost = gate_cost(g);
  return info;
}

SynthesisRequest request_of(const Permutation& goal, const mct_options* options) {
  mct_options defaults;
  mct_options_init(&defaults);
  const mct_options& o = options ? *options : defaults;
  SynthesisRequest req{.goal = goal};
  switch (o.engine) {
    case MCT_ENGINE_IDDFS: req.engine = Engine::iddfs; break;
    case MCT_ENGINE_BFS: req.engine = Engine::bfs; break;
    case MCT_ENGINE_SMV: req.engine = Engine::smv; break;
    default: throw Error(ErrorKind::configuration, "unknown engine");
  }
  req.max_bound = o.max_bound;
  req.threads = o.threads;
  if (o.timeout_seconds > 0) req.timeout_seconds = o.timeout_seconds;
  req.max_states = o.max_states;
  req.spec = o.spec == MCT_SPEC_CTL ? smv::SpecLogic::ctl : smv::SpecLogic::ltl;
  if (o.checker_command) req.checker.command = o.checker_command;
  if (o.work_dir) req.checker.work_dir = o.work_dir;
  return req;
}

mct_result* wrap(SynthesisResult r) {
  auto* out = new mct_result{std::move(r), std::nullopt};
  if (out->value.circuit) out->circuit = mct_circuit{*out->value.circuit};
  return out;
}

}  // namespace

extern "C" {

const char* mct_last_error(void) { return last_error.c_str(); }

const char* mct_status_name(mct_status status) {
  switch (status) {
    case MCT_OK: return "ok";
    case MCT_ERR_RANGE: return "range error";
    case MCT_ERR_DIMENSION: return "dimension error";
    case MCT_ERR_VALIDATION: return "validation error";
    case MCT_ERR_LENGTH: return "length error";
    case MCT_ERR_INVALID_CODE: return "invalid gate code";
    case MCT_ERR_PARSE: return "parse error";
    case MCT_ERR_RESOURCE: return "resource error";
    case MCT_ERR_EXECUTION: return "execution error";
    case MCT_ERR_CONFIGURATION: return "configuration error";
    case MCT_ERR_IO: return "i/o error";
    case MCT_ERR_ARGUMENT: return "invalid argument";
    case MCT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mct_version(void) { return "0.1.0"; }

void mct_string_free(char* text) { std::free(text); }

// ---- permutations ---------------------------------------------------------

mct_status mct_permutation_create(int lines, const uint32_t* map, size_t length,
                                  mct_permutation** out) {
  return guarded([&] {
    auto& o = deref_out(out, "null output handle");
    if (!map && length) throw ArgumentError{"null map"};
    std::vector<Word> entries(map, map + length);
    o = new mct_permutation{Permutation(lines, std::move(entries))};
  });
}

mct_status mct_permutation_identity(int lines, mct_permutation** out) {
  return guarded([&] { deref_out(out, "null output handle") = new mct_permutation{Permutation::identity(lines)}; });
}

mct_status mct_permutation_clone(const mct_permutation* perm, mct_permutation** out) {
  return guarded([&] {
    deref_out(out, "null output handle") = new mct_permutation{deref(perm, "null permutation").value};
  });
}

void mct_permutation_free(mct_permutation* perm) { delete perm; }

int mct_permutation_lines(const mct_permutation* perm) { return perm ? perm->value.lines() : 0; }

size_t mct_permutation_size(const mct_permutation* perm) { return perm ? perm->value.size() : 0; }

uint32_t mct_permutation_at(const mct_permutation* perm, size_t word) {
  if (!perm || word >= perm->value.size()) return std::numeric_limits<uint32_t>::max();
  return perm->value[word];
}

mct_status mct_permutation_compose(const mct_permutation* first, const mct_permutation* second,
                                   mct_permutation** out) {
  return guarded([&] {
    auto& o = deref_out(out, "null output handle");
    o = new mct_permutation{
        compose(deref(first, "null permutation").value, deref(second, "null permutation").value)};
  });
}

mct_status mct_permutation_to_string(const mct_permutation* perm, char** out) {
  return guarded([&] {
    deref_out(out, "null output string") = duplicate(deref(perm, "null permutation").value.to_string());
  });
}

mct_status mct_problem_parse(const char* text, mct_permutation** goal, char** name) {
  return guarded([&] {
    if (!text) throw ArgumentError{"null text"};
    auto& o = deref_out(goal, "null output handle");
    auto problem = parse_problem(text);
    char* n = name ? duplicate(problem.name) : nullptr;
    o = new mct_permutation{std::move(problem.goal)};
    if (name) *name = n;
  });
}

// ---- gates ----------------------------------------------------------------

mct_status mct_gate_count(int lines, size_t* out) {
  return guarded([&] {
    check_lines(lines);
    deref_out(out, "null output") = static_cast<size_t>(lines) << (lines - 1);
  });
}

mct_status mct_gate_at(int lines, size_t index, mct_gate_info* out) {
  return guarded([&] {
    check_lines(lines);
    auto& o = deref_out(out, "null output");
    if (index >= (static_cast<size_t>(lines) << (lines - 1))) throw ArgumentError{"gate index out of range"};
    // Valid codes are dense, so the index is the code.
    o = info_of(decode({lines, static_cast<std::uint32_t>(index)}));
  });
}

mct_status mct_gate_decode(int lines, uint32_t code, mct_gate_info* out) {
  return guarded([&] { deref_out(out, "null output") = info_of(decode({lines, code})); });
}

// ---- circuits -------------------------------------------------------------

mct_status mct_circuit_create(int lines, mct_circuit** out) {
  return guarded([&] { deref_out(out, "null output handle") = new mct_circuit{Circuit(lines)}; });
}

void mct_circuit_free(mct_circuit* circuit) { delete circuit; }

mct_status mct_circuit_append(mct_circuit* circuit, int target, const int* controls,
                              size_t control_count) {
  return guarded([&] {
    auto& c = deref_out(circuit, "null circuit");
    if (!controls && control_count) throw ArgumentError{"null controls"};
    c.value.append(MctGate(c.value.lines(), target, std::span<const int>(controls, control_count)));
  });
}

int mct_circuit_lines(const mct_circuit* circuit) { return circuit ? circuit->value.lines() : 0; }

size_t mct_circuit_gate_count(const mct_circuit* circuit) {
  return circuit ? circuit->value.gate_count() : 0;
}

uint64_t mct_circuit_quantum_cost(const mct_circuit* circuit) {
  return circuit ? circuit->value.quantum_cost() : 0;
}

mct_status mct_circuit_gate(const mct_circuit* circuit, size_t index, mct_gate_info* out) {
  return guarded([&] {
    const auto& c = deref(circuit, "null circuit");
    if (index >= c.value.gate_count()) throw ArgumentError{"gate index out of range"};
    deref_out(out, "null output") = info_of(c.value.gates()[index]);
  });
}

mct_status mct_circuit_to_permutation(const mct_circuit* circuit, mct_permutation** out) {
  return guarded([&] {
    deref_out(out, "null output handle") =
        new mct_permutation{circuit_to_permutation(deref(circuit, "null circuit").value)};
  });
}

mct_status mct_circuit_read_real(const char* text, mct_circuit** out) {
  return guarded([&] {
    if (!text) throw ArgumentError{"null text"};
    deref_out(out, "null output handle") = new mct_circuit{read_real(text)};
  });
}

mct_status mct_circuit_write_real(const mct_circuit* circuit, char** out) {
  return guarded([&] {
    deref_out(out, "null output string") = duplicate(write_real(deref(circuit, "null circuit").value));
  });
}

mct_status mct_verify(const mct_circuit* circuit, const mct_permutation* goal, int* matches,
                      uint32_t* mismatch_word) {
  return guarded([&] {
    auto& m = deref_out(matches, "null output");
    const auto first =
        first_mismatch(deref(circuit, "null circuit").value, deref(goal, "null permutation").value);
    m = first ? 0 : 1;
    if (first && mismatch_word) *mismatch_word = *first;
  });
}

// ---- synthesis ------------------------------------------------------------

void mct_options_init(mct_options* options) {
  if (!options) return;
  options->engine = MCT_ENGINE_IDDFS;
  options->max_bound = kDefaultMaxBound;
  options->threads = 1;
  options->timeout_seconds = 0.0;
  options->max_states = 4'000'000;
  options->spec = MCT_SPEC_LTL;
  options->checker_command = nullptr;
  options->work_dir = nullptr;
}

mct_status mct_synthesize(const mct_permutation* goal, const mct_options* options,
                          mct_result** out) {
  return guarded([&] {
    auto& o = deref_out(out, "null output handle");
    o = wrap(synthesize(request_of(deref(goal, "null permutation").value, options)));
  });
}

mct_status mct_bfs_oracle(const mct_permutation* goal, int max_depth, size_t max_states,
                          mct_result** out) {
  return guarded([&] {
    auto& o = deref_out(out, "null output handle");
    o = wrap(bfs_oracle(deref(goal, "null permutation").value, max_depth, max_states));
  });
}

void mct_result_free(mct_result* result) { delete result; }

mct_outcome mct_result_outcome(const mct_result* result) {
  if (!result) return MCT_BOUND_EXHAUSTED;
  switch (result->value.status) {
    case Status::solved: return MCT_SOLVED;
    case Status::bound_exhausted: return MCT_BOUND_EXHAUSTED;
    case Status::timed_out: return MCT_TIMED_OUT;
  }
  return MCT_BOUND_EXHAUSTED;
}

size_t mct_result_gc(const mct_result* result) { return result ? result->value.gc : 0; }
uint64_t mct_result_qc(const mct_result* result) { return result ? result->value.qc : 0; }
double mct_result_elapsed(const mct_result* result) {
  return result ? result->value.elapsed_seconds : 0.0;
}
uint64_t mct_result_nodes(const mct_result* result) {
  return result ? result->value.nodes_explored : 0;
}
int mct_result_bound_reached(const mct_result* result) {
  return result ? result->value.bound_reached : -1;
}
const mct_circuit* mct_result_circuit(const mct_result* result) {
  return result && result->circuit ? &*result->circuit : nullptr;
}

// ---- SMV ------------------------------------------------------------------

mct_status mct_smv_emit(const mct_permutation* goal, mct_spec_logic spec, char** out) {
  return guarded([&] {
    auto& o = deref_out(out, "null output string");
    const auto logic = spec == MCT_SPEC_CTL ? smv::SpecLogic::ctl : smv::SpecLogic::ltl;
    o = duplicate(smv::emit_model(deref(goal, "null permutation").value, logic).text);
  });
}

mct_status mct_smv_parse_trace(const char* raw, int lines, mct_circuit** out) {
  return guarded([&] {
    if (!raw) throw ArgumentError{"null text"};
    deref_out(out, "null output handle") = new mct_circuit{smv::parse_trace(raw, lines)};
  });
}

// ---- benchmarks and reports -----------------------------------------------

size_t mct_fixture_count(void) { return table1_fixtures().size(); }

mct_status mct_fixture_get(size_t index, mct_fixture* info, mct_permutation** goal) {
  return guarded([&] {
    const auto fixtures = table1_fixtures();
    if (index >= fixtures.size()) throw ArgumentError{"fixture index out of range"};
    const auto& f = fixtures[index];
    if (info) {
      info->name = f.name.c_str();
      info->expected_gc = f.expected_gc;
      info->expected_qc = f.expected_qc;
      info->qc_pinned = f.qc_pinned ? 1 : 0;
    }
    if (goal) *goal = new mct_permutation{f.goal};
  });
}

mct_status mct_random_goal(int lines, int gates, uint64_t seed, mct_permutation** out) {
  return guarded([&] {
    deref_out(out, "null output handle") = new mct_permutation{random_goal(lines, gates, seed).goal};
  });
}

void mct_bench_config_init(mct_bench_config* config) {
  if (!config) return;
  config->suite = "table1";
  mct_options_init(&config->options);
  config->options.timeout_seconds = 60.0;
  config->lines = 6;
  config->gates = 4;
  config->count = 1;
  config->seed = 1;
}

mct_status mct_bench_run(const mct_bench_config* config, mct_report** report, size_t* failed) {
  return guarded([&] {
    const auto& c = deref(config, "null config");
    auto& out = deref_out(report, "null output handle");
    const auto req = request_of(Permutation::identity(1), &c.options);
    BenchConfig bc;
    bc.suite = c.suite ? c.suite : "table1";
    bc.engine = req.engine;
    bc.max_bound = req.max_bound;
    bc.threads = req.threads;
    bc.timeout_seconds = req.timeout_seconds.value_or(std::numeric_limits<double>::infinity());
    bc.lines = c.lines;
    bc.gates = c.gates;
    bc.count = c.count;
    bc.seed = c.seed;
    bc.spec = req.spec;
    bc.checker = req.checker;
    const auto cases = run_bench(bc);
    auto* r = new mct_report;
    std::size_t bad = 0;
    for (const auto& bcase : cases) {
      r->rows.push_back(bcase.report);
      if (!bcase.passed) ++bad;
    }
    out = r;
    if (failed) *failed = bad;
  });
}

mct_status mct_report_create(mct_report** out) {
  return guarded([&] { deref_out(out, "null output handle") = new mct_report; });
}

void mct_report_free(mct_report* report) { delete report; }

mct_status mct_report_add(mct_report* report, const mct_report_row* row) {
  return guarded([&] {
    auto& r = deref_out(report, "null report");
    const auto& in = deref(row, "null row");
    const std::string name = in.name ? in.name : "";
    const std::string engine = in.engine ? in.engine : "";
    const std::string status = in.status ? in.status : "";
    if (in.circuit) {
      r.rows.push_back(ResultReport::from_circuit(name, in.circuit->value, in.elapsed_seconds,
                                                  engine, status));
    } else {
      ResultReport rr;
      rr.name = name;
      rr.lines = in.lines;
      rr.elapsed_seconds = in.elapsed_seconds;
      rr.engine = engine;
      rr.status = status;
      r.rows.push_back(std::move(rr));
    }
  });
}

size_t mct_report_size(const mct_report* report) { return report ? report->rows.size() : 0; }

mct_status mct_report_render(const mct_report* report, mct_report_format format, char** out) {
  return guarded([&] {
    const auto& r = deref(report, "null report");
    const auto f = format == MCT_REPORT_JSON_LINES ? ReportFormat::json_lines : ReportFormat::table;
    deref_out(out, "null output string") = duplicate(write_report(r.rows, f));
  });
}

}  // extern "C"
