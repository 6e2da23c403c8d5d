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

#pragma once

#include <stdexcept>
#include <string>

namespace mctsynth {

/// Classifies every failure the library can report. The C API maps each
/// kind one-to-one onto an `mct_status` code.
enum class ErrorKind {
  range,          ///< line count or word outside the supported range
  dimension,      ///< operands disagree on the number of lines
  validation,     ///< a permutation is not a bijection
  length,         ///< wrong number of permutation entries
  invalid_code,   ///< gate code whose target field is >= n
  parse,          ///< malformed text input
  resource,       ///< search exceeded its memory budget
  execution,      ///< external checker failed or produced no verdict
  configuration,  ///< missing or inconsistent options
  io,             ///< file system failure
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mctsynth
