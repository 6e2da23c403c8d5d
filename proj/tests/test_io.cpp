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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include <nlohmann/json.hpp>

#include "mctsynth/errors.hpp"
#include "mctsynth/gate_code.hpp"
#include "mctsynth/io.hpp"

namespace mctsynth {
namespace {

std::optional<ErrorKind> kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

TEST(Problem, Parse) {
  const auto p = parse_problem("n=3\nperm=0,3,2,5,4,7,6,1");
  EXPECT_EQ(p.goal, Permutation(3, {0, 3, 2, 5, 4, 7, 6, 1}));
  EXPECT_TRUE(p.name.empty());
  const auto q = parse_problem("# peres\nname = peres\n\nn = 3\nperm = 0, 3, 2, 5, 4, 7, 6, 1\n");
  EXPECT_EQ(q.name, "peres");
  EXPECT_EQ(q.goal, p.goal);
}

TEST(Problem, Errors) {
  try {
    parse_problem("n=2\nperm=0,1,2,2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation);
    EXPECT_NE(std::string(e.what()).find("value 2"), std::string::npos);
  }
  try {
    parse_problem("n=3\nperm=0,1,2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::length);
    EXPECT_NE(std::string(e.what()).find('8'), std::string::npos);
  }
  EXPECT_EQ(kind_of([] { parse_problem("n=2\nperm=0,1,x,3"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_problem("perm=0,1"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_problem("n=1"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_problem("n=1\nperm=0,1\ncolor=red"); }), ErrorKind::parse);
  EXPECT_EQ(kind_of([] { parse_problem("n=17\nperm=0"); }), ErrorKind::range);
  EXPECT_EQ(kind_of([] { parse_problem("n=2\nperm=0,1,2,9"); }), ErrorKind::validation);
}

TEST(Problem, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 10; ++n) {
    std::vector<Word> map(std::size_t{1} << n);
    std::iota(map.begin(), map.end(), Word{0});
    std::shuffle(map.begin(), map.end(), rng);
    const ProblemFile p{n % 2 ? "case" + std::to_string(n) : "", Permutation(n, map)};
    const auto back = parse_problem(render_problem(p));
    EXPECT_EQ(back.name, p.name);
    EXPECT_EQ(back.goal, p.goal);
  }
}

TEST(Real, Write) {
  const auto text = write_real(Circuit(3, {MctGate(3, 2, {0, 1})}));
  EXPECT_NE(text.find(".numvars 3\n"), std::string::npos);
  EXPECT_NE(text.find(".variables x0 x1 x2\n"), std::string::npos);
  EXPECT_NE(text.find(".begin\nt3 x0 x1 x2\n.end\n"), std::string::npos);
  EXPECT_NE(write_real(Circuit(2)).find(".begin\n.end\n"), std::string::npos);
  EXPECT_EQ(gate_to_real(MctGate(4, 0, {3, 2})), "t3 x2 x3 x0");
}

TEST(Real, ReadMinimal) {
  const auto c = read_real(".numvars 2\n.variables x0 x1\n# comment\n\n.begin\nt1 x0\nt2 x0 x1\n.end\n");
  ASSERT_EQ(c.gate_count(), 2u);
  EXPECT_EQ(c.gates()[0], MctGate(2, 0, {}));
  EXPECT_EQ(c.gates()[1], MctGate(2, 1, {0}));
}

TEST(Real, ReadErrors) {
  const std::string head = ".numvars 2\n.variables x0 x1\n.begin\n";
  auto message = [&](const std::string& body) {
    try {
      read_real(head + body + ".end\n");
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse);
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("t2 x1 x1\n").find("line 4"), std::string::npos);
  EXPECT_NE(message("t1 x0\nf2 x0 x1\n").find("line 5"), std::string::npos);
  EXPECT_NE(message("t1 x2\n").find("x2"), std::string::npos);
  EXPECT_NE(message("t3 x0 x1\n"), "no error");
  EXPECT_NE(message("t2 x0 x0 x1\n"), "no error");
  EXPECT_THROW(read_real(".numvars 2\n.variables x0 x1\n.begin\nt1 x0\n"), Error);
}

TEST(Real, RoundTripRandom) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto gates = enumerate_gates(n);
    Circuit c(n);
    const int k = static_cast<int>(rng() % 13);
    for (int i = 0; i < k; ++i) c.append(gates[rng() % gates.size()]);
    const auto text = write_real(c);
    ASSERT_EQ(read_real(text), c) << text;
    EXPECT_EQ(write_real(read_real(text)), text);
  }
}

ResultReport peres_report() {
  const Circuit c(3, {MctGate(3, 0, {1, 2}), MctGate(3, 1, {2})});
  return ResultReport::from_circuit("peres", c, 0.0123, "iddfs", "solved");
}

TEST(Report, Table) {
  const auto r = peres_report();
  EXPECT_EQ(r.gc, 2u);
  EXPECT_EQ(r.qc, 6u);
  const auto text = write_report({r}, ReportFormat::table);
  EXPECT_EQ(text,
            "name   n  GC  QC  time(s)  engine  status\n"
            "peres  3   2   6    0.012  iddfs   solved\n");
  EXPECT_EQ(write_report({}, ReportFormat::table), "name  n  GC  QC  time(s)  engine  status\n");
}

TEST(Report, JsonLines) {
  const auto text = write_report({peres_report(), peres_report()}, ReportFormat::json_lines);
  EXPECT_EQ(text, write_report({peres_report(), peres_report()}, ReportFormat::json_lines));
  const auto first = text.substr(0, text.find('\n'));
  const auto j = nlohmann::json::parse(first);
  EXPECT_EQ(j["name"], "peres");
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["gc"], 2);
  EXPECT_EQ(j["qc"], 6);
  EXPECT_EQ(j["gates"], nlohmann::json::array({"t3 x1 x2 x0", "t2 x2 x1"}));
  EXPECT_EQ(first.find("\"name\""), 1u);
  EXPECT_TRUE(write_report({}, ReportFormat::json_lines).empty());
  EXPECT_THROW(report_format_from_string("csv"), Error);
}

}  // namespace
}  // namespace mctsynth
