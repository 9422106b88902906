// Copyright 2026 The craneplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver. Talks to the library through the C interface only.
//
//   craneplan plan <scenario> -o <traj.csv> [--report <json>] [--intervals N] [--tol X]
//   craneplan validate <scenario> <traj.csv>
//   craneplan profile <scenario> -o <profile.csv>
//   craneplan check <scenario>
//
// Exit status: 0 success, 1 infeasible or not converged, 2 I/O, parse or usage error.
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "craneplan/craneplan.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

// Budgets for `validate`. Terminal mismatch is reported but not gated: it
// measures discretization accuracy, not safety.
constexpr double kNodeBoundTol = 1e-6;
constexpr double kClearanceTol = 5e-3;

using ScenarioPtr = std::unique_ptr<craneplan_scenario, decltype(&craneplan_scenario_free)>;
using PlanPtr = std::unique_ptr<craneplan_plan, decltype(&craneplan_plan_free)>;

int ExitFor(craneplan_status status) {
  switch (status) {
    case CRANEPLAN_OK:
      return kExitOk;
    case CRANEPLAN_INFEASIBLE:
    case CRANEPLAN_NOT_CONVERGED:
      return kExitFailed;
    default:
      return kExitError;
  }
}

int Report(craneplan_status status) {
  if (status != CRANEPLAN_OK) std::fprintf(stderr, "craneplan: %s\n", craneplan_last_error());
  return ExitFor(status);
}

ScenarioPtr Load(const std::string& path, craneplan_status* status) {
  craneplan_scenario* raw = nullptr;
  *status = craneplan_scenario_load(path.c_str(), &raw);
  return ScenarioPtr(raw, &craneplan_scenario_free);
}

void PrintValidation(const craneplan_validation& v) {
  std::printf("terminal error        %.3e\n", v.terminal_error);
  std::printf("clearance violation   %.3e m\n", v.max_clearance_violation);
  std::printf("floor violation       %.3e m\n", v.max_floor_violation);
  std::printf("node bound violation  %.3e m\n", v.node_bound_violation);
  std::printf("node deviation        %.3e\n", v.node_deviation);
  std::printf("sway peak             %.4f rad\n", v.sway_peak);
  std::printf("time monotone         %s\n", v.time_monotone ? "yes" : "no");
  std::printf("lower bound           %.4f s (%s)\n", v.lower_bound,
              v.lower_bound_ok ? "respected" : "VIOLATED");
}

bool Certified(const craneplan_validation& v) {
  return v.time_monotone && v.lower_bound_ok && v.node_bound_violation <= kNodeBoundTol &&
         v.max_clearance_violation <= kClearanceTol && v.max_floor_violation <= kClearanceTol;
}

struct PlanArgs {
  std::string scenario, output, report;
  int intervals = 0;
  double tol = 0.0;
};

int RunPlan(const PlanArgs& args) {
  craneplan_status status;
  ScenarioPtr scenario = Load(args.scenario, &status);
  if (status != CRANEPLAN_OK) return Report(status);
  if (args.intervals != 0) {
    status = craneplan_scenario_set_intervals(scenario.get(), args.intervals);
    if (status != CRANEPLAN_OK) return Report(status);
  }
  if (args.tol != 0.0) {
    status = craneplan_scenario_set_tolerance(scenario.get(), args.tol);
    if (status != CRANEPLAN_OK) return Report(status);
  }

  craneplan_plan* raw = nullptr;
  const craneplan_status run = craneplan_plan_run(scenario.get(), &raw);
  PlanPtr plan(raw, &craneplan_plan_free);
  if (!plan) return Report(run);
  // Keep the message: later calls may overwrite it.
  const std::string run_error = run == CRANEPLAN_OK ? "" : craneplan_last_error();

  craneplan_summary s;
  craneplan_plan_summary(plan.get(), &s);
  std::printf("status                %s\n", craneplan_solve_status_name(s.solve_status));
  std::printf("final time            %.6f s\n", s.objective);
  std::printf("kkt residual          %.3e\n", s.kkt_residual);
  std::printf("iterations            %d\n", s.iterations);
  std::printf("wall time             %.2f s\n", s.wall_time);
  std::printf("intervals             %d (%d variables, %d constraints)\n", s.intervals,
              s.num_variables, s.num_constraints);
  if (s.has_validation) PrintValidation(s.validation);

  if (!args.report.empty()) {
    status = craneplan_plan_write_report(plan.get(), args.report.c_str());
    if (status != CRANEPLAN_OK) return Report(status);
  }
  if (run != CRANEPLAN_OK) {
    std::fprintf(stderr, "craneplan: %s\n", run_error.c_str());
    return ExitFor(run);
  }
  return Report(craneplan_plan_write_csv(plan.get(), args.output.c_str()));
}

int RunValidate(const std::string& scenario_path, const std::string& csv_path) {
  craneplan_status status;
  ScenarioPtr scenario = Load(scenario_path, &status);
  if (status != CRANEPLAN_OK) return Report(status);
  craneplan_validation v;
  status = craneplan_validate_csv(scenario.get(), csv_path.c_str(), &v);
  if (status != CRANEPLAN_OK) return Report(status);
  PrintValidation(v);
  if (!Certified(v)) {
    std::fprintf(stderr, "craneplan: trajectory fails validation\n");
    return kExitFailed;
  }
  return kExitOk;
}

int RunProfile(const std::string& scenario_path, const std::string& output) {
  craneplan_status status;
  ScenarioPtr scenario = Load(scenario_path, &status);
  if (status != CRANEPLAN_OK) return Report(status);
  return Report(craneplan_scenario_write_profile(scenario.get(), output.c_str()));
}

int RunCheck(const std::string& scenario_path) {
  craneplan_status status;
  ScenarioPtr scenario = Load(scenario_path, &status);
  if (status != CRANEPLAN_OK) return Report(status);
  status = craneplan_scenario_check(scenario.get());
  if (status == CRANEPLAN_OK) std::printf("ok\n");
  return Report(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-optimal overhead crane trajectory planner"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(craneplan_version()));

  PlanArgs plan;
  CLI::App* plan_cmd = app.add_subcommand("plan", "Plan a trajectory and write it as CSV");
  plan_cmd->add_option("scenario", plan.scenario, "Scenario file")->required();
  plan_cmd->add_option("-o,--output", plan.output, "Trajectory CSV")->required();
  plan_cmd->add_option("--report", plan.report, "Write the solve and validation report (JSON)");
  plan_cmd->add_option("--intervals", plan.intervals, "Number of control intervals")
      ->check(CLI::Range(2, 1000000));
  plan_cmd->add_option("--tol", plan.tol, "KKT tolerance")->check(CLI::PositiveNumber);

  std::string scenario, second;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Re-simulate a trajectory CSV and check clearance");
  validate_cmd->add_option("scenario", scenario, "Scenario file")->required();
  validate_cmd->add_option("trajectory", second, "Trajectory CSV")->required();

  CLI::App* profile_cmd = app.add_subcommand("profile", "Write the stack profile as CSV");
  profile_cmd->add_option("scenario", scenario, "Scenario file")->required();
  profile_cmd->add_option("-o,--output", second, "Profile CSV")->required();

  CLI::App* check_cmd = app.add_subcommand("check", "Run the feasibility pre-checks only");
  check_cmd->add_option("scenario", scenario, "Scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "craneplan: %s\n\n%s", e.what(), app.help().c_str());
    return kExitError;
  }

  if (*plan_cmd) return RunPlan(plan);
  if (*validate_cmd) return RunValidate(scenario, second);
  if (*profile_cmd) return RunProfile(scenario, second);
  return RunCheck(scenario);
}
