// Copyright 2026 The knapred Authors
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

#include <doctest.h>

#include <string>

#include "knapred/commands.hpp"
#include "knapred/errors.hpp"

using namespace knapred;
using namespace knapred::cli;

namespace {

const std::string kDemo =
    R"({"A":[["1","1","0"],["0","1","1"]],"b":["1","1"],"c":["1","1","1"],"sense":"min"})";
const std::string kInfeasible = R"({"A":[["1","0"],["0","2"]],"b":["1","1"],"c":["0","0"]})";
const std::string kZeroGap = R"({"A":[["1","0"],["1","1"]],"b":["0","4"],"c":["5","4"]})";

std::vector<std::string> strings(const Report& arr) {
  std::vector<std::string> out;
  for (const auto& e : arr) out.push_back(e.get<std::string>());
  return out;
}

}  // namespace

TEST_SUITE("commands") {

TEST_CASE("report keys come in a fixed order") {
  const auto out = run_solve("demo", kDemo);
  std::vector<std::string> keys;
  for (const auto& [k, v] : out.report.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "source", "arguments", "instance_digest",
                                         "status", "exit_code", "result"});
  SolveOptions timed;
  timed.timings = true;
  CHECK(run_solve("demo", kDemo, timed).report.contains("timings_ms"));
}

TEST_CASE("aggregate reports f, a, a0 and its growth") {
  const auto out = run_aggregate("demo", kDemo);
  CHECK(out.exit_code == kExitOk);
  const auto& r = out.report["result"];
  CHECK(strings(r["f"]) == std::vector<std::string>{"1", "2"});
  CHECK(strings(r["a"]) == std::vector<std::string>{"1", "3", "2"});
  CHECK(r["a0"] == "3");
  CHECK(r["a0_growth"]["matches_a0"] == true);

  AggregateOptions swap;
  swap.row_perm = std::vector<std::size_t>{1, 0};
  const auto p = run_aggregate("demo", kDemo, swap);
  CHECK(p.report["result"]["a0"] == "3");
  CHECK(strings(p.report["result"]["a"]) == std::vector<std::string>{"2", "3", "1"});

  swap.row_perm = std::vector<std::size_t>{0, 0};
  CHECK(run_aggregate("demo", kDemo, swap).exit_code == kExitInput);
}

TEST_CASE("solve exit codes") {
  auto out = run_solve("demo", kDemo);
  CHECK(out.exit_code == kExitOk);
  CHECK(strings(out.report["result"]["x"]) == std::vector<std::string>{"0", "1", "0"});
  CHECK(out.report["result"]["objective"] == "1");
  CHECK(out.report["result"]["knapsack"]["H"] == "4");
  CHECK(strings(out.report["result"]["knapsack"]["cost"]) ==
        std::vector<std::string>{"5", "9", "5"});

  out = run_solve("inf", kInfeasible);
  CHECK(out.exit_code == kExitInfeasible);
  CHECK(out.report["status"] == "infeasible");

  out = run_solve("unb", R"({"A":[["1","0"]],"b":["1"],"c":["0","-1"]})");
  CHECK(out.exit_code == kExitUnbounded);

  SolveOptions tight;
  tight.budget.max_rhs = 2;
  out = run_solve("demo", kDemo, tight);
  CHECK(out.exit_code == kExitBudget);
  CHECK(out.report["error"]["message"].get<std::string>().find("prod(b_i + 1) - 1") != std::string::npos);

  CHECK(run_solve("bad", "{").exit_code == kExitInput);
  CHECK(run_solve("bad", R"({"A":[["1"]],"b":["-1"],"c":["0"]})").exit_code == kExitInput);
}

TEST_CASE("verify passes the worked instance and flags the zero gap") {
  auto out = run_verify("demo", kDemo);
  CHECK(out.exit_code == kExitOk);
  for (const auto& [name, check] : out.report["result"]["checks"].items()) {
    INFO(name);
    CHECK(check["holds"] == true);
  }

  out = run_verify("gap", kZeroGap);
  CHECK(out.exit_code == kExitFalsified);
  CHECK(out.report["result"]["falsification"]["check"] == "rhs_vertex");
  CHECK(out.report["result"]["checks"]["pipeline_vs_oracle"]["holds"] == false);

  VerifyOptions small;
  small.cap = 2;
  CHECK(run_verify("demo", kDemo, small).exit_code == kExitBudget);
}

TEST_CASE("bound") {
  BoundOptions o;
  o.vertex = {1, 0, 1};
  auto out = run_bound("demo", kDemo, o);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report["result"]["bound"] == "3");
  CHECK(out.report["result"]["slack"] == "0");

  o.vertex = {1, 1, 1};
  CHECK(run_bound("demo", kDemo, o).exit_code == kExitInput);
  o.vertex = {1, 0};
  CHECK(run_bound("demo", kDemo, o).exit_code == kExitInput);

  // (1,1) is the midpoint of (2,0) and (0,2).
  o.vertex = {1, 1};
  out = run_bound("line", R"({"A":[["1","1"]],"b":["2"],"c":["0","0"]})", o);
  CHECK(out.exit_code == kExitInput);
  CHECK(out.report["result"].contains("witness"));
}

TEST_CASE("oracle dumps both sets") {
  const auto out = run_oracle("demo", kDemo);
  CHECK(out.exit_code == kExitOk);
  const auto& r = out.report["result"];
  CHECK(r["feasible_set"]["points"].size() == 2);
  CHECK(r["aggregated_set"]["points"].size() == 3);
  OracleOptions small;
  small.cap = 1;
  CHECK(run_oracle("demo", kDemo, small).exit_code == kExitBudget);
}

TEST_CASE("reports are byte-identical across runs") {
  CHECK(render(run_solve("demo", kDemo).report) == render(run_solve("demo", kDemo).report));
  CHECK(render(run_verify("gap", kZeroGap).report) == render(run_verify("gap", kZeroGap).report));
  CHECK(render(run_oracle("demo", kDemo).report) == render(run_oracle("demo", kDemo).report));
}

TEST_CASE("digest depends only on the canonical instance") {
  const auto a = parse_instance(kDemo);
  const auto b = parse_instance(
      R"({ "sense": "min", "c": ["1","1","1"], "b": ["1","1"], "A": [["1","1","0"],["0","1","1"]] })");
  CHECK(instance_digest(a) == instance_digest(b));
  CHECK(instance_digest(a).rfind("fnv1a64:", 0) == 0);
  CHECK(instance_digest(a) != instance_digest(parse_instance(kInfeasible)));
}

TEST_CASE("csv parsing") {
  CHECK(parse_integer_csv("1,0,-2") == std::vector<Integer>{1, 0, -2});
  CHECK(parse_index_csv("2,0,1") == std::vector<std::size_t>{2, 0, 1});
  CHECK_THROWS_AS(parse_integer_csv("1,,2"), ValidationError);
  CHECK_THROWS_AS(parse_index_csv("-1"), ValidationError);
}

}  // TEST_SUITE
