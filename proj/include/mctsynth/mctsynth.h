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

/*
 * C interface to the mctsynth library.
 *
 * All objects are opaque handles created by the library and released with
 * the matching *_free function. Every fallible call returns an mct_status;
 * on failure mct_last_error() describes the problem for the calling thread.
 * Strings returned through `char**` are owned by the caller and released
 * with mct_string_free().
 */

#ifndef MCTSYNTH_MCTSYNTH_H
#define MCTSYNTH_MCTSYNTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(MCTSYNTH_BUILDING)
#define MCT_API __attribute__((visibility("default")))
#else
#define MCT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mct_status {
  MCT_OK = 0,
  MCT_ERR_RANGE = 1,
  MCT_ERR_DIMENSION = 2,
  MCT_ERR_VALIDATION = 3,
  MCT_ERR_LENGTH = 4,
  MCT_ERR_INVALID_CODE = 5,
  MCT_ERR_PARSE = 6,
  MCT_ERR_RESOURCE = 7,
  MCT_ERR_EXECUTION = 8,
  MCT_ERR_CONFIGURATION = 9,
  MCT_ERR_IO = 10,
  MCT_ERR_ARGUMENT = 11, /* null handle or bad index */
  MCT_ERR_INTERNAL = 12
} mct_status;

typedef enum mct_engine { MCT_ENGINE_IDDFS = 0, MCT_ENGINE_BFS = 1, MCT_ENGINE_SMV = 2 } mct_engine;

typedef enum mct_spec_logic { MCT_SPEC_LTL = 0, MCT_SPEC_CTL = 1 } mct_spec_logic;

typedef enum mct_outcome {
  MCT_SOLVED = 0,
  MCT_BOUND_EXHAUSTED = 1,
  MCT_TIMED_OUT = 2
} mct_outcome;

typedef enum mct_report_format { MCT_REPORT_TABLE = 0, MCT_REPORT_JSON_LINES = 1 } mct_report_format;

typedef struct mct_permutation mct_permutation;
typedef struct mct_circuit mct_circuit;
typedef struct mct_result mct_result;
typedef struct mct_report mct_report;

/* ---- diagnostics ------------------------------------------------------ */

MCT_API const char* mct_last_error(void);
MCT_API const char* mct_status_name(mct_status status);
MCT_API const char* mct_version(void);
MCT_API void mct_string_free(char* text);

/* ---- permutations ----------------------------------------------------- */

MCT_API mct_status mct_permutation_create(int lines, const uint32_t* map, size_t length,
                                          mct_permutation** out);
MCT_API mct_status mct_permutation_identity(int lines, mct_permutation** out);
MCT_API mct_status mct_permutation_clone(const mct_permutation* perm, mct_permutation** out);
MCT_API void mct_permutation_free(mct_permutation* perm);
MCT_API int mct_permutation_lines(const mct_permutation* perm);
MCT_API size_t mct_permutation_size(const mct_permutation* perm);
/* Output word for `word`; UINT32_MAX if out of range. */
MCT_API uint32_t mct_permutation_at(const mct_permutation* perm, size_t word);
/* Result applies `first` then `second`. */
MCT_API mct_status mct_permutation_compose(const mct_permutation* first,
                                           const mct_permutation* second,
                                           mct_permutation** out);
MCT_API mct_status mct_permutation_to_string(const mct_permutation* perm, char** out);

/* Problem file text ("n=..", "perm=..", optional "name=.."). `name` may be
 * NULL; otherwise it receives the (possibly empty) problem name. */
MCT_API mct_status mct_problem_parse(const char* text, mct_permutation** goal, char** name);

/* ---- gates ------------------------------------------------------------ */

typedef struct mct_gate_info {
  uint32_t code;          /* gate code, msb = target field */
  int code_width;         /* ceil(log2 n) + n - 1 */
  int target;             /* target line */
  uint32_t control_lines; /* bit i set iff line i is a control */
  uint64_t cost;          /* quantum cost */
} mct_gate_info;

/* n * 2^(n-1). */
MCT_API mct_status mct_gate_count(int lines, size_t* out);
/* Gate number `index` in ascending code order. */
MCT_API mct_status mct_gate_at(int lines, size_t index, mct_gate_info* out);
MCT_API mct_status mct_gate_decode(int lines, uint32_t code, mct_gate_info* out);

/* ---- circuits --------------------------------------------------------- */

MCT_API mct_status mct_circuit_create(int lines, mct_circuit** out);
MCT_API void mct_circuit_free(mct_circuit* circuit);
MCT_API mct_status mct_circuit_append(mct_circuit* circuit, int target, const int* controls,
                                      size_t control_count);
MCT_API int mct_circuit_lines(const mct_circuit* circuit);
MCT_API size_t mct_circuit_gate_count(const mct_circuit* circuit);
MCT_API uint64_t mct_circuit_quantum_cost(const mct_circuit* circuit);
MCT_API mct_status mct_circuit_gate(const mct_circuit* circuit, size_t index, mct_gate_info* out);
MCT_API mct_status mct_circuit_to_permutation(const mct_circuit* circuit, mct_permutation** out);
MCT_API mct_status mct_circuit_read_real(const char* text, mct_circuit** out);
MCT_API mct_status mct_circuit_write_real(const mct_circuit* circuit, char** out);

/* `*matches` is 1 iff the circuit realizes `goal`. Otherwise, when
 * `mismatch_word` is non-NULL, it receives the first differing input word. */
MCT_API mct_status mct_verify(const mct_circuit* circuit, const mct_permutation* goal,
                              int* matches, uint32_t* mismatch_word);

/* ---- synthesis -------------------------------------------------------- */

typedef struct mct_options {
  mct_engine engine;
  int max_bound;                /* default 32 */
  int threads;                  /* default 1 */
  double timeout_seconds;       /* <= 0: unlimited */
  size_t max_states;            /* bfs engine */
  mct_spec_logic spec;          /* smv engine */
  const char* checker_command;  /* smv engine; NULL or "" uses $MCTSYNTH_NUSMV */
  const char* work_dir;         /* smv engine; NULL: system temp dir */
} mct_options;

MCT_API void mct_options_init(mct_options* options);

MCT_API mct_status mct_synthesize(const mct_permutation* goal, const mct_options* options,
                                  mct_result** out);
MCT_API mct_status mct_bfs_oracle(const mct_permutation* goal, int max_depth, size_t max_states,
                                  mct_result** out);
MCT_API void mct_result_free(mct_result* result);
MCT_API mct_outcome mct_result_outcome(const mct_result* result);
MCT_API size_t mct_result_gc(const mct_result* result);
MCT_API uint64_t mct_result_qc(const mct_result* result);
MCT_API double mct_result_elapsed(const mct_result* result);
MCT_API uint64_t mct_result_nodes(const mct_result* result);
MCT_API int mct_result_bound_reached(const mct_result* result);
/* Borrowed; NULL unless solved. Valid until the result is freed. */
MCT_API const mct_circuit* mct_result_circuit(const mct_result* result);

/* ---- SMV model -------------------------------------------------------- */

MCT_API mct_status mct_smv_emit(const mct_permutation* goal, mct_spec_logic spec, char** out);
MCT_API mct_status mct_smv_parse_trace(const char* raw, int lines, mct_circuit** out);

/* ---- benchmarks and reports ------------------------------------------- */

typedef struct mct_fixture {
  const char* name; /* static storage */
  size_t expected_gc;
  uint64_t expected_qc;
  int qc_pinned;
} mct_fixture;

MCT_API size_t mct_fixture_count(void);
MCT_API mct_status mct_fixture_get(size_t index, mct_fixture* info, mct_permutation** goal);
MCT_API mct_status mct_random_goal(int lines, int gates, uint64_t seed, mct_permutation** out);

typedef struct mct_bench_config {
  const char* suite; /* "table1" or "random" */
  mct_options options;
  int lines;         /* random suite */
  int gates;         /* random suite */
  int count;         /* random suite */
  uint64_t seed;     /* random suite */
} mct_bench_config;

MCT_API void mct_bench_config_init(mct_bench_config* config);
/* Runs a suite; the rows land in `*report`, failures and timeouts in
 * `*failed`. */
MCT_API mct_status mct_bench_run(const mct_bench_config* config, mct_report** report,
                                 size_t* failed);

typedef struct mct_report_row {
  const char* name;
  const char* engine;
  const char* status;
  double elapsed_seconds;
  const mct_circuit* circuit; /* gc, qc and gate list; NULL reports zeros */
  int lines;                  /* used when circuit is NULL */
} mct_report_row;

MCT_API mct_status mct_report_create(mct_report** out);
MCT_API void mct_report_free(mct_report* report);
MCT_API mct_status mct_report_add(mct_report* report, const mct_report_row* row);
MCT_API size_t mct_report_size(const mct_report* report);
MCT_API mct_status mct_report_render(const mct_report* report, mct_report_format format,
                                     char** out);

#ifdef __cplusplus
}
#endif

#endif /* MCTSYNTH_MCTSYNTH_H */
