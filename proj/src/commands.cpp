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

#include "knapred/commands.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>

#include "knapred/aggregation.hpp"
#include "knapred/errors.hpp"

namespace knapred::cli {

namespace {

using Clock = std::chrono::steady_clock;

Report ints(std::span<const Integer> values) {
  Report arr = Report::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

Report indices(std::span<const std::size_t> values) {
  Report arr = Report::array();
  for (auto v : values) arr.push_back(v);
  return arr;
}

Report points(std::span<const Point> pts) {
  Report arr = Report::array();
  for (const auto& p : pts) arr.push_back(ints(p));
  return arr;
}

Report witness_json(const oracle::ConvexWitness& w) {
  Report out;
  out["indices"] = indices(w.indices);
  Report weights = Report::array();
  for (const auto& q : w.weights) weights.push_back(to_decimal(q));
  out["weights"] = std::move(weights);
  return out;
}

Report vertex_report_json(const oracle::VertexReport& vr) {
  Report out;
  out["vertices"] = indices(vr.vertices);
  Report wit = Report::array();
  for (const auto& [idx, w] : vr.witnesses) {
    Report entry;
    entry["point"] = idx;
    entry["combination"] = witness_json(w);
    wit.push_back(std::move(entry));
  }
  out["witnesses"] = std::move(wit);
  return out;
}

Report instance_json(const IPInstance& inst) { return Report::parse(serialize_instance(inst)); }

Report check_json(const oracle::CheckResult& r) {
  Report out;
  out["holds"] = r.holds;
  out["vacuous"] = r.vacuous;
  if (r.counterexample) out["counterexample"] = ints(*r.counterexample);
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

std::string csv(std::span<const Integer> values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + to_decimal(values[i]);
  return s;
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Assembles the top-level report in a fixed key order.
struct Draft {
  std::string command;
  std::string source;
  Report arguments = Report::object();
  std::optional<std::string> digest;
  std::string status;
  int exit_code = kExitOk;
  Report result = Report::object();
  std::optional<Report> error;
  std::optional<Report> timings;
  std::string summary;

  CommandOutput finish() && {
    CommandOutput out;
    Report& r = out.report;
    r["command"] = command;
    r["source"] = source;
    r["arguments"] = std::move(arguments);
    if (digest) r["instance_digest"] = *digest;
    r["status"] = status;
    r["exit_code"] = exit_code;
    r["result"] = std::move(result);
    if (error) r["error"] = std::move(*error);
    if (timings) r["timings_ms"] = std::move(*timings);
    out.exit_code = exit_code;
    out.summary = command + ": " + summary;
    return out;
  }
};

Draft start(std::string_view command, std::string_view source) {
  Draft d;
  d.command = command;
  d.source = source;
  return d;
}

CommandOutput fail(Draft d, int code, std::string_view status, std::string_view kind,
                   std::string_view message) {
  d.exit_code = code;
  d.status = status;
  Report err;
  err["kind"] = kind;
  err["message"] = message;
  d.error = std::move(err);
  d.summary = std::string(status) + " (" + std::string(message) + ")";
  return std::move(d).finish();
}

// Parses the instance or produces the exit-4 report.
std::optional<IPInstance> load(Draft& d, std::string_view text, std::optional<CommandOutput>& bail) {
  try {
    IPInstance inst = parse_instance(text);
    d.digest = instance_digest(inst);
    return inst;
  } catch (const ParseError& e) {
    bail = fail(std::move(d), kExitInput, "input_error", "parse_error", e.what());
  } catch (const ValidationError& e) {
    bail = fail(std::move(d), kExitInput, "input_error", "validation_error", e.what());
  }
  return std::nullopt;
}

Report budget_args(const SolverBudget& b) {
  Report r;
  r["budget_rhs"] = to_decimal(b.max_rhs);
  r["budget_cells"] = to_decimal(b.max_cells);
  return r;
}

Report aggregation_block(const IPInstance& inst) {
  Report r;
  const Vector f = aggregation_vector(inst.b);
  const AggregatedRow row = aggregate(inst.A, inst.b);
  const Integer closed = aggregated_rhs_closed_form(inst.b);
  r["m"] = inst.rows();
  r["n"] = inst.cols();
  r["f"] = ints(f);
  r["a"] = ints(row.a);
  r["a0"] = to_decimal(row.a0);
  Report blowup;
  blowup["formula"] = "prod(b_i + 1) - 1";
  blowup["value"] = to_decimal(closed);
  blowup["digits"] = to_decimal(closed).size();
  blowup["matches_a0"] = closed == row.a0;
  r["a0_growth"] = std::move(blowup);
  r["zero_columns"] = indices(zero_columns(inst));
  return r;
}

}  // namespace

std::string instance_digest(const IPInstance& inst) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : serialize_instance(inst)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string render(const Report& report) { return report.dump(2) + "\n"; }

std::vector<Integer> parse_integer_csv(std::string_view text) {
  std::vector<Integer> out;
  if (text.empty()) throw ValidationError("empty integer list");
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    auto v = parse_decimal(token);
    if (!v) throw ValidationError("not an integer: \"" + std::string(token) + "\"");
    out.push_back(std::move(*v));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::size_t> parse_index_csv(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto& v : parse_integer_csv(text)) {
    if (sgn(v) < 0 || !v.fits_ulong_p()) throw ValidationError("bad index " + to_decimal(v));
    out.push_back(v.get_ui());
  }
  return out;
}

CommandOutput input_error(std::string_view command, std::string_view source,
                          std::string_view message) {
  return fail(start(command, source), kExitInput, "input_error", "input_error", message);
}

CommandOutput run_aggregate(std::string_view source, std::string_view text,
                            const AggregateOptions& opts) {
  Draft d = start("aggregate", source);
  if (opts.row_perm) d.arguments["row_perm"] = indices(*opts.row_perm);
  std::optional<CommandOutput> bail;
  auto inst = load(d, text, bail);
  if (!inst) return std::move(*bail);
  try {
    if (opts.row_perm) *inst = permute_rows(*inst, *opts.row_perm);
  } catch (const ValidationError& e) {
    return fail(std::move(d), kExitInput, "input_error", "validation_error", e.what());
  }

  d.result = aggregation_block(*inst);
  d.status = "ok";
  d.summary = "f=(" + csv(aggregation_vector(inst->b)) + ") a0=" +
              d.result["a0"].get<std::string>() + " (" +
              std::to_string(d.result["a0_growth"]["digits"].get<std::size_t>()) + " digits)";
  return std::move(d).finish();
}

CommandOutput run_solve(std::string_view source, std::string_view text, const SolveOptions& opts) {
  Draft d = start("solve", source);
  d.arguments = budget_args(opts.budget);
  d.arguments["kernel"] = std::string(simd::kernel_name(opts.knapsack.kernel));
  d.arguments["exact_only"] = opts.knapsack.exact_only;
  if (opts.row_perm) d.arguments["row_perm"] = indices(*opts.row_perm);
  std::optional<CommandOutput> bail;
  auto inst = load(d, text, bail);
  if (!inst) return std::move(*bail);

  const auto t0 = Clock::now();
  Solution sol;
  try {
    if (opts.row_perm) *inst = permute_rows(*inst, *opts.row_perm);
    sol = solve_original(*inst, opts.budget, opts.knapsack);
  } catch (const UnboundedProblem& e) {
    return fail(std::move(d), kExitUnbounded, "unbounded", "unbounded_problem", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(std::move(d), kExitBudget, "budget_exceeded", "budget_exceeded", e.what());
  } catch (const ValidationError& e) {
    return fail(std::move(d), kExitInput, "input_error", "validation_error", e.what());
  }
  const double solve_ms = elapsed_ms(t0);

  const auto& K = sol.knapsack;
  Report& r = d.result;
  r["sense"] = inst->sense == Sense::Minimize ? "min" : "max";
  r["status"] = std::string(status_name(sol.status));
  if (sol.status == SolveStatus::Optimal) {
    r["x"] = ints(sol.x);
    r["objective"] = to_decimal(sol.objective);
  }
  Report kn;
  kn["f"] = ints(K.meta.f);
  kn["a"] = ints(K.a);
  kn["a0"] = to_decimal(K.a0);
  kn["cost"] = ints(K.cost);
  kn["L"] = to_decimal(K.meta.L);
  kn["k"] = to_decimal(K.meta.k);
  kn["H"] = to_decimal(K.meta.H);
  kn["column_map"] = indices(K.meta.column_map);
  Report dropped = Report::array();
  for (const auto& dc : K.meta.dropped) {
    Report e;
    e["column"] = dc.column;
    e["reason"] = dc.reason;
    dropped.push_back(std::move(e));
  }
  kn["dropped"] = std::move(dropped);
  r["knapsack"] = std::move(kn);
  Report sur;
  sur["status"] = std::string(status_name(sol.surrogate.status));
  if (sol.surrogate.status == KnapsackStatus::Optimal) {
    sur["x"] = ints(sol.surrogate.x);
    sur["value"] = to_decimal(sol.surrogate.value);
    sur["lifted_x"] = ints(sol.surrogate_point);
    sur["residual"] = ints(sol.residual);
  }
  r["surrogate"] = std::move(sur);

  if (opts.timings) {
    Report t;
    t["solve"] = solve_ms;
    d.timings = std::move(t);
  }

  if (sol.status == SolveStatus::Optimal) {
    d.status = "optimal";
    d.exit_code = kExitOk;
    d.summary = "optimal x=(" + csv(sol.x) + ") objective=" + to_decimal(sol.objective);
  } else {
    d.status = "infeasible";
    d.exit_code = kExitInfeasible;
    if (sol.surrogate.status == KnapsackStatus::Optimal) {
      r["diagnostic"] = "knapsack minimizer (" + csv(sol.surrogate_point) +
                        ") violates A x = b with residual (" + csv(sol.residual) + ")";
    } else {
      r["diagnostic"] = "aggregated knapsack has no solution";
    }
    d.summary = "infeasible: " + r["diagnostic"].get<std::string>();
  }
  return std::move(d).finish();
}

CommandOutput run_verify(std::string_view source, std::string_view text, const VerifyOptions& opts) {
  Draft d = start("verify", source);
  d.arguments["cap"] = opts.cap;
  d.arguments.update(budget_args(opts.budget));
  std::optional<CommandOutput> bail;
  auto inst = load(d, text, bail);
  if (!inst) return std::move(*bail);

  const auto t0 = Clock::now();
  Report checks;
  Report sizes;
  std::optional<std::pair<std::string, oracle::CheckResult>> falsified;
  auto record = [&](const std::string& name, const oracle::CheckResult& res) {
    checks[name] = check_json(res);
    if (!res.holds && !falsified) falsified.emplace(name, res);
  };

  try {
    const Integer a0 = aggregate(inst->A, inst->b).a0;
    if (a0 > static_cast<unsigned long>(opts.cap)) {
      throw CapExceeded("aggregated right-hand side a0 = " + to_decimal(a0) + " exceeds cap " +
                        std::to_string(opts.cap));
    }

    record("rhs_vertex", oracle::check_rhs_is_vertex(inst->b, opts.cap));

    const ReducedInstance reduced = drop_zero_columns(*inst);
    if (reduced.inner.cols() == 0) {
      const oracle::CheckResult none{true, true, std::nullopt, "every column of A is zero"};
      record("vertex_preservation", none);
      record("vertex_rhs_bound", none);
      record("box_injectivity", none);
    } else {
      const auto audit = oracle::audit_instance(reduced.inner, opts.cap);
      sizes["feasible_points"] = audit.feasible.size();
      sizes["feasible_vertices"] = audit.vertices.vertices.size();
      sizes["aggregated_points"] = audit.aggregated.size();
      sizes["aggregated_vertices"] = audit.aggregated_vertices.vertices.size();
      record("vertex_preservation", audit.vertex_preservation);
      record("vertex_rhs_bound", audit.vertex_rhs_bound);
      record("box_injectivity", audit.box_injectivity);
    }

    // Pipeline against brute force, in the instance's own sense.
    const auto truth = oracle::brute_force_optimum(*inst, opts.cap);
    oracle::CheckResult agree;
    Report cmp;
    std::string pipeline_status;
    std::optional<Integer> pipeline_value;
    try {
      const Solution sol = solve_original(*inst, opts.budget);
      pipeline_status = std::string(status_name(sol.status));
      if (sol.status == SolveStatus::Optimal) {
        pipeline_value = sol.objective;
        if (!evaluate(*inst, sol.x).feasible) {
          agree.holds = false;
          agree.counterexample = sol.x;
          agree.detail = "pipeline optimum violates A x = b";
        }
      }
    } catch (const UnboundedProblem&) {
      pipeline_status = "unbounded";
    }
    const std::string oracle_status = truth.status == oracle::OptimumStatus::Optimal  ? "optimal"
                                      : truth.status == oracle::OptimumStatus::Unbounded ? "unbounded"
                                                                                         : "infeasible";
    if (agree.holds && pipeline_status != oracle_status) {
      agree.holds = false;
      agree.detail = "status mismatch: pipeline " + pipeline_status + ", oracle " + oracle_status;
    }
    if (agree.holds && pipeline_value && *pipeline_value != truth.value) {
      agree.holds = false;
      agree.detail = "value mismatch: pipeline " + to_decimal(*pipeline_value) + ", oracle " +
                     to_decimal(truth.value);
    }
    record("pipeline_vs_oracle", agree);
    cmp["pipeline_status"] = pipeline_status;
    cmp["oracle_status"] = oracle_status;
    if (pipeline_value) cmp["pipeline_objective"] = to_decimal(*pipeline_value);
    if (truth.status == oracle::OptimumStatus::Optimal) {
      cmp["oracle_objective"] = to_decimal(truth.value);
      cmp["oracle_optimizers"] = points(truth.argopt);
    }
    d.result["comparison"] = std::move(cmp);
  } catch (const CapExceeded& e) {
    return fail(std::move(d), kExitBudget, "cap_exceeded", "cap_exceeded", e.what());
  } catch (const IterationLimit& e) {
    return fail(std::move(d), kExitBudget, "cap_exceeded", "iteration_limit", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(std::move(d), kExitBudget, "budget_exceeded", "budget_exceeded", e.what());
  }

  d.result["checks"] = std::move(checks);
  d.result["sizes"] = sizes.is_null() ? Report::object() : std::move(sizes);
  if (opts.timings) {
    Report t;
    t["verify"] = elapsed_ms(t0);
    d.timings = std::move(t);
  }

  if (falsified) {
    Report dump;
    dump["check"] = falsified->first;
    dump["instance"] = instance_json(*inst);
    if (falsified->second.counterexample) {
      dump["counterexample"] = ints(*falsified->second.counterexample);
    }
    dump["detail"] = falsified->second.detail;
    d.result["falsification"] = std::move(dump);
    d.status = "falsified";
    d.exit_code = kExitFalsified;
    d.summary = "check '" + falsified->first + "' failed: " + falsified->second.detail;
  } else {
    d.status = "ok";
    d.summary = "all checks hold";
  }
  return std::move(d).finish();
}

CommandOutput run_bound(std::string_view source, std::string_view text, const BoundOptions& opts) {
  Draft d = start("bound", source);
  d.arguments["vertex"] = ints(opts.vertex);
  d.arguments["cap"] = opts.cap;
  std::optional<CommandOutput> bail;
  auto inst = load(d, text, bail);
  if (!inst) return std::move(*bail);

  const Point& v = opts.vertex;
  if (v.size() != inst->cols()) {
    return fail(std::move(d), kExitInput, "input_error", "dimension_mismatch",
                "vertex has " + std::to_string(v.size()) + " coordinates, instance has " +
                    std::to_string(inst->cols()) + " columns");
  }
  const Evaluation ev = evaluate(*inst, v);
  if (!ev.feasible) {
    d.result["residual"] = ints(ev.residual);
    return fail(std::move(d), kExitInput, "input_error", "infeasible_point",
                "point (" + csv(v) + ") is not in M(A, b); residual (" + csv(ev.residual) + ")");
  }

  Report& r = d.result;
  const Integer bound = vertex_lower_bound(v);
  const Integer a0 = aggregate(inst->A, inst->b).a0;

  // Vertex certification.
  std::optional<oracle::ConvexWitness> witness;
  std::vector<Point> cited;
  std::string certification = "certified";
  for (std::size_t j : zero_columns(*inst)) {
    if (sgn(v[j]) > 0) {
      // Midpoint of the same point with x_j = 0 and x_j doubled.
      Point lo = v, hi = v;
      lo[j] = 0;
      hi[j] = 2 * v[j];
      cited = {lo, hi};
      witness = oracle::ConvexWitness{{0, 1}, {Rational(1, 2), Rational(1, 2)}};
      break;
    }
  }
  if (!witness) {
    try {
      Vector upper(inst->cols());
      const BoxBounds box = box_bounds(*inst);
      for (std::size_t j = 0; j < inst->cols(); ++j) upper[j] = box.upper[j].value_or(Integer(0));
      const auto S = oracle::enumerate_feasible(inst->A, inst->b, opts.cap, upper);
      std::vector<Point> others;
      for (const auto& p : S.points) {
        if (p != v) others.push_back(p);
      }
      witness = oracle::check_convex_combination(v, others);
      if (witness) {
        for (auto idx : witness->indices) cited.push_back(others[idx]);
        for (std::size_t i = 0; i < witness->indices.size(); ++i) witness->indices[i] = i;
      }
    } catch (const CapExceeded&) {
      certification = "skipped_cap_exceeded";
    } catch (const IterationLimit&) {
      certification = "skipped_iteration_limit";
    }
  }

  if (witness) {
    Report w;
    w["points"] = points(cited);
    w["weights"] = witness_json(*witness)["weights"];
    r["witness"] = std::move(w);
    return fail(std::move(d), kExitInput, "input_error", "not_a_vertex",
                "point (" + csv(v) + ") is a convex combination of other feasible points");
  }

  r["vertex"] = ints(v);
  r["vertex_certification"] = certification;
  r["bound"] = to_decimal(bound);
  r["a0"] = to_decimal(a0);
  r["slack"] = to_decimal(Integer(a0 - bound));
  if (a0 < bound && certification == "certified") {
    d.status = "falsified";
    d.exit_code = kExitFalsified;
    d.summary = "a0 below the vertex bound";
  } else {
    d.status = "ok";
    d.summary = "bound=" + to_decimal(bound) + " a0=" + to_decimal(a0) +
                " slack=" + to_decimal(Integer(a0 - bound));
  }
  return std::move(d).finish();
}

CommandOutput run_oracle(std::string_view source, std::string_view text, const OracleOptions& opts) {
  Draft d = start("oracle", source);
  d.arguments["cap"] = opts.cap;
  std::optional<CommandOutput> bail;
  auto inst = load(d, text, bail);
  if (!inst) return std::move(*bail);

  try {
    const ReducedInstance reduced = drop_zero_columns(*inst);
    Report& r = d.result;
    r["column_map"] = indices(reduced.column_map);
    r["dropped_columns"] = indices(zero_columns(*inst));
    if (reduced.inner.cols() == 0) {
      r["note"] = "every column of A is zero";
    } else {
      const auto audit = oracle::audit_instance(reduced.inner, opts.cap);
      Report orig;
      orig["points"] = points(audit.feasible.points);
      orig["vertex_report"] = vertex_report_json(audit.vertices);
      r["feasible_set"] = std::move(orig);
      Report agg;
      agg["f"] = ints(audit.f);
      agg["a"] = ints(audit.a);
      agg["a0"] = to_decimal(audit.a0);
      agg["points"] = points(audit.aggregated.points);
      agg["vertex_report"] = vertex_report_json(audit.aggregated_vertices);
      r["aggregated_set"] = std::move(agg);
    }
  } catch (const CapExceeded& e) {
    return fail(std::move(d), kExitBudget, "cap_exceeded", "cap_exceeded", e.what());
  } catch (const IterationLimit& e) {
    return fail(std::move(d), kExitBudget, "cap_exceeded", "iteration_limit", e.what());
  }
  d.status = "ok";
  d.summary = "dumped feasible and aggregated sets";
  return std::move(d).finish();
}

}  // namespace knapred::cli
