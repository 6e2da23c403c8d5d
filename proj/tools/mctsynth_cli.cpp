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

// mctsynth command-line front end. Talks to the library only through the C
// interface in mctsynth/mctsynth.h.
//
// Exit codes: 0 solved / verified / all benchmarks passed, 1 benchmark
// failures, 2 no cascade within the bound or time budget, 3 verification
// mismatch, 64 usage or input error, 70 external checker or internal failure.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "mctsynth/mctsynth.h"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitBenchFailed = 1;
constexpr int kExitNotFound = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitUsage = 64;
constexpr int kExitSoftware = 70;

struct Failure {
  int code;
  std::string message;
};

void check(mct_status status, const std::string& context) {
  if (status == MCT_OK) return;
  const int code = (status == MCT_ERR_EXECUTION || status == MCT_ERR_INTERNAL ||
                    status == MCT_ERR_RESOURCE)
                       ? kExitSoftware
                       : kExitUsage;
  throw Failure{code, context + ": " + mct_status_name(status) + ": " + mct_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const noexcept { Free(p); }
};
using PermPtr = std::unique_ptr<mct_permutation, Deleter<mct_permutation, mct_permutation_free>>;
using CircuitPtr = std::unique_ptr<mct_circuit, Deleter<mct_circuit, mct_circuit_free>>;
using ResultPtr = std::unique_ptr<mct_result, Deleter<mct_result, mct_result_free>>;
using ReportPtr = std::unique_ptr<mct_report, Deleter<mct_report, mct_report_free>>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  mct_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitUsage, "cannot write " + path};
  out << text;
}

std::string controls_text(uint32_t lines_mask, int lines) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < lines; ++i) {
    if (lines_mask & (1u << i)) {
      out += (first ? "" : ",") + std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

std::string code_text(uint32_t code, int width) {
  std::string out;
  for (int i = width - 1; i >= 0; --i) out += ((code >> i) & 1u) ? '1' : '0';
  return out.empty() ? "-" : out;
}

struct EngineFlags {
  std::string engine = "iddfs";
  int max_bound = 32;
  int threads = 1;
  double timeout = 0.0;
  std::string spec = "ltl";
  std::string checker;
  std::string work_dir;
  std::string format = "table";
};

void add_engine_flags(CLI::App* cmd, EngineFlags& f) {
  cmd->add_option("--engine", f.engine, "Search engine")
      ->check(CLI::IsMember({"iddfs", "bfs", "smv"}))
      ->capture_default_str();
  cmd->add_option("--max-bound", f.max_bound, "Largest gate count to try")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--threads", f.threads, "Worker threads for the iddfs engine")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--spec", f.spec, "Temporal logic of the SMV specification")
      ->check(CLI::IsMember({"ltl", "ctl"}))
      ->capture_default_str();
  cmd->add_option("--checker", f.checker,
                  "Model checker command template with {model} and {bound} placeholders");
  cmd->add_option("--work-dir", f.work_dir, "Directory for temporary SMV models");
  cmd->add_option("--format", f.format, "Report format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
}

mct_options options_of(const EngineFlags& f) {
  mct_options o;
  mct_options_init(&o);
  o.engine = f.engine == "bfs" ? MCT_ENGINE_BFS : f.engine == "smv" ? MCT_ENGINE_SMV : MCT_ENGINE_IDDFS;
  o.max_bound = f.max_bound;
  o.threads = f.threads;
  o.timeout_seconds = f.timeout;
  o.spec = f.spec == "ctl" ? MCT_SPEC_CTL : MCT_SPEC_LTL;
  o.checker_command = f.checker.empty() ? nullptr : f.checker.c_str();
  o.work_dir = f.work_dir.empty() ? nullptr : f.work_dir.c_str();
  return o;
}

mct_report_format format_of(const std::string& f) {
  return f == "json" ? MCT_REPORT_JSON_LINES : MCT_REPORT_TABLE;
}

PermPtr load_problem(const std::string& path, std::string* name) {
  const auto text = slurp(path);
  mct_permutation* goal = nullptr;
  char* raw_name = nullptr;
  check(mct_problem_parse(text.c_str(), &goal, &raw_name), path);
  PermPtr out(goal);
  auto parsed = take_string(raw_name);
  if (name) *name = parsed;
  return out;
}

// ---------------------------------------------------------------------------

struct SynthArgs {
  std::string problem;
  std::string real_out;
  std::string smv_out;
  EngineFlags engine;
};

int cmd_synth(const SynthArgs& a) {
  std::string name;
  auto goal = load_problem(a.problem, &name);
  if (name.empty()) name = a.problem;

  if (!a.smv_out.empty()) {
    char* model = nullptr;
    check(mct_smv_emit(goal.get(), a.engine.spec == "ctl" ? MCT_SPEC_CTL : MCT_SPEC_LTL, &model),
          "emit SMV model");
    spill(a.smv_out, take_string(model));
  }

  const auto options = options_of(a.engine);
  mct_result* raw = nullptr;
  check(mct_synthesize(goal.get(), &options, &raw), "synthesis");
  ResultPtr result(raw);
  const auto outcome = mct_result_outcome(result.get());
  const mct_circuit* circuit = mct_result_circuit(result.get());

  ReportPtr report;
  {
    mct_report* r = nullptr;
    check(mct_report_create(&r), "report");
    report.reset(r);
  }
  const char* status = outcome == MCT_SOLVED ? "solved"
                       : outcome == MCT_TIMED_OUT ? "timed_out"
                                                  : "bound_exhausted";
  mct_report_row row{name.c_str(), a.engine.engine.c_str(), status,
                     mct_result_elapsed(result.get()), circuit, mct_permutation_lines(goal.get())};
  check(mct_report_add(report.get(), &row), "report");
  char* text = nullptr;
  check(mct_report_render(report.get(), format_of(a.engine.format), &text), "report");
  std::cout << take_string(text);

  if (outcome != MCT_SOLVED) {
    std::cerr << "no cascade found (" << status << ", last complete bound "
              << mct_result_bound_reached(result.get()) << ")\n";
    return kExitNotFound;
  }
  char* real = nullptr;
  check(mct_circuit_write_real(circuit, &real), "write netlist");
  const auto netlist = take_string(real);
  if (!a.real_out.empty()) {
    spill(a.real_out, netlist);
  } else if (a.engine.format == "table") {
    std::cout << netlist;
  }
  return kExitSolved;
}

int cmd_verify(const std::string& netlist_path, const std::string& problem_path) {
  const auto text = slurp(netlist_path);
  mct_circuit* raw = nullptr;
  check(mct_circuit_read_real(text.c_str(), &raw), netlist_path);
  CircuitPtr circuit(raw);
  auto goal = load_problem(problem_path, nullptr);

  int matches = 0;
  uint32_t word = 0;
  check(mct_verify(circuit.get(), goal.get(), &matches, &word), "verify");
  if (matches) {
    std::cout << "verified: " << mct_circuit_gate_count(circuit.get()) << " gates realize the goal\n";
    return kExitSolved;
  }
  mct_permutation* realized_raw = nullptr;
  check(mct_circuit_to_permutation(circuit.get(), &realized_raw), "simulate");
  PermPtr realized(realized_raw);
  std::cout << "mismatch at word " << word << ": circuit gives "
            << mct_permutation_at(realized.get(), word) << ", goal expects "
            << mct_permutation_at(goal.get(), word) << "\n";
  return kExitMismatch;
}

struct BenchArgs {
  std::string suite = "table1";
  int lines = 6;
  int gates = 4;
  int count = 1;
  uint64_t seed = 1;
  EngineFlags engine;
};

int cmd_bench(BenchArgs a) {
  mct_bench_config config;
  mct_bench_config_init(&config);
  config.suite = a.suite.c_str();
  config.options = options_of(a.engine);
  config.lines = a.lines;
  config.gates = a.gates;
  config.count = a.count;
  config.seed = a.seed;
  if (a.suite == "random") {
    std::cerr << "random suite: n=" << a.lines << " k=" << a.gates << " count=" << a.count
              << " seed=" << a.seed << "\n";
  }
  mct_report* raw = nullptr;
  size_t failed = 0;
  check(mct_bench_run(&config, &raw, &failed), "bench");
  ReportPtr report(raw);
  char* text = nullptr;
  check(mct_report_render(report.get(), format_of(a.engine.format), &text), "report");
  std::cout << take_string(text);
  std::cerr << mct_report_size(report.get()) - failed << "/" << mct_report_size(report.get())
            << " passed\n";
  return failed ? kExitBenchFailed : kExitSolved;
}

int cmd_gates(int lines) {
  if (lines < 1 || lines > 8) {
    throw Failure{kExitUsage, "gates: full listing supports 1..8 lines, got " + std::to_string(lines)};
  }
  size_t count = 0;
  check(mct_gate_count(lines, &count), "gates");
  std::cout << "code        target  controls          QC\n";
  for (size_t i = 0; i < count; ++i) {
    mct_gate_info g;
    check(mct_gate_at(lines, i, &g), "gates");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s  %6d  %-16s  %llu\n", code_text(g.code, g.code_width).c_str(),
                  g.target, controls_text(g.control_lines, lines).c_str(),
                  static_cast<unsigned long long>(g.cost));
    std::cout << buf;
  }
  std::cerr << count << (count == 1 ? " gate" : " gates") << " on " << lines
            << (lines == 1 ? " line\n" : " lines\n");
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gate-count optimal synthesis of reversible MCT circuits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mct_version());

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize an optimal cascade for a problem file");
  synth_cmd->add_option("problem", synth.problem, "Problem file (n=..., perm=...)")->required();
  synth_cmd->add_option("--real,-o", synth.real_out, "Write the cascade as a .real netlist");
  synth_cmd->add_option("--emit-smv", synth.smv_out, "Write the SMV model for the goal");
  synth_cmd->add_option("--timeout", synth.engine.timeout, "Wall-clock budget in seconds (0: none)");
  add_engine_flags(synth_cmd, synth.engine);

  std::string netlist, problem;
  auto* verify_cmd = app.add_subcommand("verify", "Check that a netlist realizes a problem's goal");
  verify_cmd->add_option("netlist", netlist, ".real netlist")->required();
  verify_cmd->add_option("problem", problem, "Problem file")->required();

  BenchArgs bench;
  bench.engine.timeout = 60.0;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", bench.suite, "Suite to run")
      ->check(CLI::IsMember({"table1", "random"}))
      ->capture_default_str();
  bench_cmd->add_option("--lines,-n", bench.lines, "Random suite: line count")->capture_default_str();
  bench_cmd->add_option("--gates,-k", bench.gates, "Random suite: generating gate count")
      ->capture_default_str();
  bench_cmd->add_option("--count", bench.count, "Random suite: number of goals")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Random suite: first seed")->capture_default_str();
  bench_cmd->add_option("--timeout", bench.engine.timeout, "Per-case budget in seconds (0: none)")
      ->capture_default_str();
  add_engine_flags(bench_cmd, bench.engine);

  int gate_lines = 0;
  auto* gates_cmd = app.add_subcommand("gates", "List every MCT gate on n lines with its code");
  gates_cmd->add_option("n", gate_lines, "Line count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*synth_cmd) return cmd_synth(synth);
    if (*verify_cmd) return cmd_verify(netlist, problem);
    if (*bench_cmd) return cmd_bench(bench);
    if (*gates_cmd) return cmd_gates(gate_lines);
  } catch (const Failure& f) {
    std::cerr << "mctsynth: " << f.message << "\n";
    return f.code;
  }
  return kExitUsage;
}
