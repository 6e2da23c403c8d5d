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

/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "mctsynth/mctsynth.h"

static int failures = 0;

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: CHECK(%s) failed (last error: %s)\n",  \
              __FILE__, __LINE__, #cond, mct_last_error());          \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static void test_permutations(void) {
  const uint32_t peres[] = {0, 3, 2, 5, 4, 7, 6, 1};
  const uint32_t dup[] = {0, 1, 2, 2};
  mct_permutation* p = NULL;
  mct_permutation* id = NULL;
  mct_permutation* q = NULL;
  char* text = NULL;

  CHECK(mct_permutation_create(3, peres, 8, &p) == MCT_OK);
  CHECK(mct_permutation_lines(p) == 3);
  CHECK(mct_permutation_size(p) == 8);
  CHECK(mct_permutation_at(p, 1) == 3);
  CHECK(mct_permutation_at(p, 8) == UINT32_MAX);
  CHECK(mct_permutation_identity(3, &id) == MCT_OK);
  CHECK(mct_permutation_compose(id, p, &q) == MCT_OK);
  CHECK(mct_permutation_to_string(q, &text) == MCT_OK);
  CHECK(text && strcmp(text, "0,3,2,5,4,7,6,1") == 0);
  mct_string_free(text);

  mct_permutation* bad = NULL;
  CHECK(mct_permutation_create(2, dup, 4, &bad) == MCT_ERR_VALIDATION);
  CHECK(bad == NULL);
  CHECK(strstr(mct_last_error(), "2") != NULL);
  CHECK(mct_permutation_create(3, dup, 4, &bad) == MCT_ERR_LENGTH);
  CHECK(mct_permutation_identity(17, &bad) == MCT_ERR_RANGE);
  CHECK(mct_permutation_create(3, NULL, 8, &bad) == MCT_ERR_ARGUMENT);
  CHECK(mct_permutation_compose(id, NULL, &bad) == MCT_ERR_ARGUMENT);

  mct_permutation* two = NULL;
  CHECK(mct_permutation_identity(2, &two) == MCT_OK);
  CHECK(mct_permutation_compose(id, two, &bad) == MCT_ERR_DIMENSION);

  char* name = NULL;
  mct_permutation* goal = NULL;
  CHECK(mct_problem_parse("name=peres\nn=3\nperm=0,3,2,5,4,7,6,1\n", &goal, &name) == MCT_OK);
  CHECK(name && strcmp(name, "peres") == 0);
  mct_string_free(name);
  mct_permutation_free(goal);
  CHECK(mct_problem_parse("n=3\nperm=0,1,2\n", &goal, NULL) == MCT_ERR_LENGTH);

  mct_permutation_free(two);
  mct_permutation_free(q);
  mct_permutation_free(id);
  mct_permutation_free(p);
  mct_permutation_free(NULL);
  CHECK(strcmp(mct_status_name(MCT_ERR_PARSE), "MCT_ERR_PARSE") == 0 ||
        strlen(mct_status_name(MCT_ERR_PARSE)) > 0);
  CHECK(strlen(mct_version()) > 0);
}

static void test_gates(void) {
  size_t count = 0;
  mct_gate_info info;
  CHECK(mct_gate_count(4, &count) == MCT_OK && count == 32);
  CHECK(mct_gate_decode(4, 3, &info) == MCT_OK);
  CHECK(info.target == 0 && info.control_lines == ((1u << 2) | (1u << 3)) && info.cost == 5);
  CHECK(info.code_width == 5);
  CHECK(mct_gate_at(4, 3, &info) == MCT_OK && info.code == 3);
  CHECK(mct_gate_at(4, 32, &info) == MCT_ERR_ARGUMENT);
  CHECK(mct_gate_decode(3, 12, &info) == MCT_ERR_INVALID_CODE);
}

static void test_circuits(void) {
  mct_circuit* c = NULL;
  mct_permutation* goal = NULL;
  char* real = NULL;
  int matches = 0;
  uint32_t word = 0;
  const int c1[] = {0, 1};
  const int c2[] = {0, 3};
  const int c3[] = {1, 2};
  const int c4[] = {2, 3};
  const uint32_t p[] = {0, 1, 2, 11, 4, 5, 15, 6, 8, 13, 10, 14, 9, 12, 3, 7};

  CHECK(mct_circuit_create(4, &c) == MCT_OK);
  CHECK(mct_circuit_append(c, 3, c1, 2) == MCT_OK);
  CHECK(mct_circuit_append(c, 1, c2, 2) == MCT_OK);
  CHECK(mct_circuit_append(c, 3, c3, 2) == MCT_OK);
  CHECK(mct_circuit_append(c, 0, c4, 2) == MCT_OK);
  CHECK(mct_circuit_append(c, 0, c4 + 1, 1) == MCT_OK);
  CHECK(mct_circuit_append(c, 2, c4, 2) == MCT_ERR_RANGE);
  CHECK(mct_circuit_gate_count(c) == 5);
  mct_circuit_free(c);

  CHECK(mct_circuit_create(4, &c) == MCT_OK);
  mct_circuit_append(c, 3, c1, 2);
  mct_circuit_append(c, 1, c2, 2);
  mct_circuit_append(c, 3, c3, 2);
  mct_circuit_append(c, 0, c4, 2);
  CHECK(mct_circuit_quantum_cost(c) == 20);
  CHECK(mct_permutation_create(4, p, 16, &goal) == MCT_OK);
  CHECK(mct_verify(c, goal, &matches, &word) == MCT_OK && matches == 1);

  CHECK(mct_circuit_write_real(c, &real) == MCT_OK);
  CHECK(real && strstr(real, "t3 x2 x3 x0") != NULL);
  mct_circuit* back = NULL;
  CHECK(mct_circuit_read_real(real, &back) == MCT_OK);
  CHECK(mct_circuit_gate_count(back) == 4);
  CHECK(mct_verify(back, goal, &matches, &word) == MCT_OK && matches == 1);
  mct_string_free(real);
  mct_circuit_free(back);
  CHECK(mct_circuit_read_real(".numvars 2\n.variables x0 x1\n.begin\nt2 x1 x1\n.end\n",
                              &back) == MCT_ERR_PARSE);
  CHECK(strstr(mct_last_error(), "line 4") != NULL);

  mct_circuit* empty = NULL;
  mct_permutation* id = NULL;
  mct_permutation_identity(4, &id);
  CHECK(mct_circuit_create(4, &empty) == MCT_OK);
  CHECK(mct_verify(empty, goal, &matches, &word) == MCT_OK && matches == 0 && word == 3);
  CHECK(mct_verify(empty, id, &matches, &word) == MCT_OK && matches == 1);

  mct_permutation_free(id);
  mct_circuit_free(empty);
  mct_permutation_free(goal);
  mct_circuit_free(c);
}

static void test_synthesis(void) {
  const uint32_t ham3[] = {0, 7, 4, 3, 2, 5, 1, 6};
  mct_permutation* goal = NULL;
  mct_result* r = NULL;
  mct_options o;
  int matches = 0;
  uint32_t word = 0;

  mct_options_init(&o);
  CHECK(o.max_bound == 32 && o.threads == 1 && o.engine == MCT_ENGINE_IDDFS);
  CHECK(mct_permutation_create(3, ham3, 8, &goal) == MCT_OK);
  CHECK(mct_synthesize(goal, &o, &r) == MCT_OK);
  CHECK(mct_result_outcome(r) == MCT_SOLVED);
  CHECK(mct_result_gc(r) == 5 && mct_result_qc(r) == 9);
  CHECK(mct_result_bound_reached(r) == 5);
  CHECK(mct_verify(mct_result_circuit(r), goal, &matches, &word) == MCT_OK && matches == 1);
  mct_result_free(r);

  o.max_bound = 4;
  CHECK(mct_synthesize(goal, &o, &r) == MCT_OK);
  CHECK(mct_result_outcome(r) == MCT_BOUND_EXHAUSTED);
  CHECK(mct_result_circuit(r) == NULL);
  mct_result_free(r);

  CHECK(mct_bfs_oracle(goal, 6, 1000000, &r) == MCT_OK);
  CHECK(mct_result_gc(r) == 5);
  mct_result_free(r);
  CHECK(mct_bfs_oracle(goal, 6, 10, &r) == MCT_ERR_RESOURCE);

  mct_options_init(&o);
  o.engine = MCT_ENGINE_SMV;
  o.checker_command = "/nonexistent/checker {model}";
  CHECK(mct_synthesize(goal, &o, &r) == MCT_ERR_EXECUTION);

  char* model = NULL;
  CHECK(mct_smv_emit(goal, MCT_SPEC_CTL, &model) == MCT_OK);
  CHECK(model && strstr(model, "CTLSPEC !(EF goal);") != NULL);
  mct_string_free(model);

  mct_circuit* parsed = NULL;
  CHECK(mct_smv_parse_trace("  -> State: 1.1 <-\n    g0 = TRUE\n    g1 = FALSE\n"
                            "  -> State: 1.2 <-\n    s2_0 = FALSE\n",
                            2, &parsed) == MCT_OK);
  CHECK(mct_circuit_gate_count(parsed) == 1);
  mct_circuit_free(parsed);
  mct_permutation_free(goal);
}

static void test_bench(void) {
  mct_bench_config config;
  mct_report* report = NULL;
  size_t failed = 99;
  char* text = NULL;

  CHECK(mct_fixture_count() == 15);
  mct_fixture f;
  mct_permutation* goal = NULL;
  CHECK(mct_fixture_get(0, &f, &goal) == MCT_OK);
  CHECK(strcmp(f.name, "peres") == 0 && f.expected_gc == 2 && f.qc_pinned);
  mct_permutation_free(goal);
  CHECK(mct_fixture_get(15, &f, &goal) == MCT_ERR_ARGUMENT);

  mct_bench_config_init(&config);
  CHECK(mct_bench_run(&config, &report, &failed) == MCT_OK);
  CHECK(failed == 0 && mct_report_size(report) == 15);
  CHECK(mct_report_render(report, MCT_REPORT_TABLE, &text) == MCT_OK);
  CHECK(text && strstr(text, "peres") != NULL && strstr(text, "PASS") != NULL);
  mct_string_free(text);
  mct_report_free(report);

  config.suite = "nope";
  CHECK(mct_bench_run(&config, &report, &failed) == MCT_ERR_CONFIGURATION);

  CHECK(mct_report_create(&report) == MCT_OK);
  CHECK(mct_report_render(report, MCT_REPORT_JSON_LINES, &text) == MCT_OK);
  CHECK(text && text[0] == '\0');
  mct_string_free(text);
  mct_report_row row = {"empty", "iddfs", "solved", 0.0, NULL, 3};
  CHECK(mct_report_add(report, &row) == MCT_OK);
  CHECK(mct_report_render(report, MCT_REPORT_JSON_LINES, &text) == MCT_OK);
  CHECK(text && strstr(text, "\"name\":\"empty\"") != NULL);
  mct_string_free(text);
  mct_report_free(report);
}

int main(void) {
  test_permutations();
  test_gates();
  test_circuits();
  test_synthesis();
  test_bench();
  if (failures) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return EXIT_FAILURE;
  }
  printf("all C API checks passed\n");
  return EXIT_SUCCESS;
}
