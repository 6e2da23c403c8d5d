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

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <fstream>

#include "mctsynth/errors.hpp"
#include "mctsynth/smv.hpp"
#include "mctsynth/synth.hpp"

namespace mctsynth::smv {

namespace {

using Clock = std::chrono::steady_clock;

std::string replace_all(std::string text, std::string_view from, const std::string& to) {
  for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
    text.replace(pos, from.size(), to);
  }
  return text;
}

std::string shell_quote(const std::string& s) {
  return "'" + replace_all(s, "'", "'\\''") + "'";
}

struct ProcessResult {
  int exit_code = -1;
  bool timed_out = false;
  std::string output;
};

// Runs `command` under /bin/sh with stdout and stderr captured together.
ProcessResult run_shell(const std::string& command, std::chrono::duration<double> timeout) {
  int fds[2];
  if (pipe(fds) != 0) throw Error(ErrorKind::execution, "pipe() failed");
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw Error(ErrorKind::execution, "fork() failed");
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);

  ProcessResult result;
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(timeout);
  char buffer[4096];
  for (;;) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
    if (left.count() <= 0) {
      result.timed_out = true;
      kill(-pid, SIGKILL);
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    const int ready = poll(&p, 1, static_cast<int>(std::min<long long>(left.count(), 1000)));
    if (ready < 0 && errno != EINTR) break;
    if (ready <= 0) continue;
    const ssize_t got = read(fds[0], buffer, sizeof buffer);
    if (got <= 0) break;
    result.output.append(buffer, static_cast<std::size_t>(got));
  }
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::filesystem::path model_path(const CheckerOptions& options) {
  static std::atomic<unsigned> counter{0};
  const auto dir = options.work_dir.empty() ? std::filesystem::temp_directory_path()
                                            : options.work_dir;
  return dir / ("mctsynth-" + std::to_string(getpid()) + "-" +
                std::to_string(counter.fetch_add(1)) + ".smv");
}

}  // namespace

std::string default_checker_command(SpecLogic logic) {
  const char* env = std::getenv("MCTSYNTH_NUSMV");
  const std::string exe = env && *env ? env : "NuSMV";
  if (logic == SpecLogic::ltl) return exe + " -bmc -bmc_length {bound} {model}";
  return exe + " {model}";
}

bool checker_configured(const CheckerOptions& options) {
  const char* env = std::getenv("MCTSYNTH_NUSMV");
  if (!options.command.empty() || (env && *env)) return true;
  const char* path = std::getenv("PATH");
  if (!path) return false;
  std::string_view rest(path);
  while (!rest.empty()) {
    const auto colon = rest.find(':');
    const auto dir = rest.substr(0, colon);
    if (!dir.empty() && access((std::string(dir) + "/NuSMV").c_str(), X_OK) == 0) return true;
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  return false;
}

CheckOutcome run_external(const Model& model, const CheckerOptions& options, int bound) {
  if (bound < 0) throw Error(ErrorKind::configuration, "bound must be non-negative");
  const auto path = model_path(options);
  {
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::io, "cannot write " + path.string());
    file << model.text;
  }
  const std::string templ =
      options.command.empty() ? default_checker_command(model.logic) : options.command;
  auto command = replace_all(templ, "{model}", shell_quote(path.string()));
  command = replace_all(command, "{bound}", std::to_string(bound));

  ProcessResult proc;
  try {
    proc = run_shell(command, options.timeout);
  } catch (...) {
    std::filesystem::remove(path);
    throw;
  }
  std::filesystem::remove(path);

  CheckOutcome outcome;
  outcome.output = proc.output;
  if (proc.timed_out) {
    throw Error(ErrorKind::execution, "checker timed out: " + command);
  }

  const auto& out = proc.output;
  std::size_t falsified_at = std::string::npos;
  bool proven = false;
  std::size_t pos = 0;
  while (pos < out.size()) {
    auto end = out.find('\n', pos);
    if (end == std::string::npos) end = out.size();
    const std::string_view line(out.data() + pos, end - pos);
    if (line.starts_with("-- specification")) {
      if (line.find("is false") != std::string_view::npos) {
        falsified_at = end;
        break;
      }
      if (line.find("is true") != std::string_view::npos) proven = true;
    } else if (line.starts_with("-- no counterexample found with bound")) {
      proven = true;
    }
    pos = end + 1;
  }

  if (falsified_at != std::string::npos) {
    outcome.falsified = true;
    outcome.trace = parse_trace_steps(std::string_view(out).substr(falsified_at), model.lines);
    return outcome;
  }
  if (proven) return outcome;
  throw Error(ErrorKind::execution, "checker produced no verdict (exit code " +
                                        std::to_string(proc.exit_code) + ") for '" + command +
                                        "':\n" + out);
}

}  // namespace mctsynth::smv

namespace mctsynth::detail {

// Bound-by-bound driver around the external checker. For LTL the checker runs
// in bounded mode at bound 0, 1, 2, ... and the first counterexample is
// optimal. A CTL spec is checked once, unbounded.
SynthesisResult synthesize_with_checker(const SynthesisRequest& request) {
  using Clock = std::chrono::steady_clock;
  if (!smv::checker_configured(request.checker)) {
    throw Error(ErrorKind::configuration,
                "the smv engine needs a checker: --checker, $MCTSYNTH_NUSMV or NuSMV on PATH");
  }
  const auto start = Clock::now();
  const auto model = smv::emit_model(request.goal, request.spec);
  const int n = request.goal.lines();

  SynthesisResult result;
  auto options = request.checker;
  const bool bounded = request.spec == smv::SpecLogic::ltl;
  const int last = bounded ? request.max_bound : 0;
  for (int bound = 0; bound <= last; ++bound) {
    if (request.timeout_seconds) {
      const double left = *request.timeout_seconds -
                          std::chrono::duration<double>(Clock::now() - start).count();
      if (left <= 0) {
        result.status = Status::timed_out;
        break;
      }
      options.timeout = std::min(options.timeout, std::chrono::duration<double>(left));
    }
    smv::CheckOutcome outcome;
    try {
      outcome = smv::run_external(model, options, bounded ? bound : request.max_bound);
    } catch (const Error&) {
      if (request.timeout_seconds &&
          std::chrono::duration<double>(Clock::now() - start).count() >=
              *request.timeout_seconds) {
        result.status = Status::timed_out;
        break;
      }
      throw;
    }
    ++result.nodes_explored;
    if (!outcome.falsified) {
      result.bound_reached = bounded ? bound : request.max_bound;
      continue;
    }
    // Keep the shortest prefix that already realizes the goal; lasso-shaped
    // counterexamples may carry steps past it.
    const auto full = smv::trace_to_circuit(outcome.trace, n);
    Circuit prefix(n);
    bool found = request.goal.is_identity();
    for (std::size_t i = 0; i < full.gates().size() && !found; ++i) {
      prefix.append(full.gates()[i]);
      found = verify(prefix, request.goal);
    }
    if (!found) {
      throw Error(ErrorKind::execution, "checker counterexample does not realize the goal");
    }
    result.status = Status::solved;
    result.gc = prefix.gate_count();
    result.qc = prefix.quantum_cost();
    result.bound_reached = static_cast<int>(result.gc);
    result.circuit = std::move(prefix);
    break;
  }
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

}  // namespace mctsynth::detail
