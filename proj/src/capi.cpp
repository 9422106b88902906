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

#include "craneplan/craneplan.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "craneplan/error.hpp"
#include "craneplan/planner.hpp"
#include "craneplan/scenario_io.hpp"
#include "craneplan/trajectory_io.hpp"

struct craneplan_scenario {
  craneplan::Scenario value;
};

struct craneplan_plan {
  craneplan::PlanResult value;
};

namespace {

using craneplan::ErrorCode;

thread_local std::string g_last_error;

craneplan_status Fail(craneplan_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

craneplan_status StatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return CRANEPLAN_IO_ERROR;
    case ErrorCode::kMissingKey:
    case ErrorCode::kBadNumber:
    case ErrorCode::kLengthMismatch:
    case ErrorCode::kBoundsInverted:
      return CRANEPLAN_PARSE_ERROR;
    case ErrorCode::kInfeasibleProfile:
    case ErrorCode::kInconsistentBoundary:
      return CRANEPLAN_INFEASIBLE;
    case ErrorCode::kSimulationBlowup:
    case ErrorCode::kRopeLengthNonpositive:
    case ErrorCode::kZeroVelocity:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kInvalidArgument:
      return CRANEPLAN_INVALID_ARGUMENT;
  }
  return CRANEPLAN_INTERNAL_ERROR;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
craneplan_status Guard(Body&& body) {
  try {
    return body();
  } catch (const craneplan::Error& e) {
    return Fail(StatusFor(e.code()), std::string(craneplan::ToString(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return Fail(CRANEPLAN_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return Fail(CRANEPLAN_INTERNAL_ERROR, e.what());
  } catch (...) {
    return Fail(CRANEPLAN_INTERNAL_ERROR, "unknown error");
  }
}

craneplan_validation ToC(const craneplan::ValidationReport& v) {
  return {v.terminal_error,  v.max_clearance_violation, v.max_floor_violation,
          v.sway_peak,       v.time_monotone ? 1 : 0,   v.lower_bound_ok ? 1 : 0,
          v.lower_bound,     v.node_bound_violation,    v.node_deviation};
}

craneplan_solve_status ToC(craneplan::SolveStatus s) {
  switch (s) {
    case craneplan::SolveStatus::kConverged: return CRANEPLAN_SOLVE_CONVERGED;
    case craneplan::SolveStatus::kMaxIter: return CRANEPLAN_SOLVE_MAX_ITER;
    case craneplan::SolveStatus::kInfeasible: return CRANEPLAN_SOLVE_INFEASIBLE;
    case craneplan::SolveStatus::kNumericalFailure: return CRANEPLAN_SOLVE_NUMERICAL_FAILURE;
  }
  return CRANEPLAN_SOLVE_NUMERICAL_FAILURE;
}

#define CRANEPLAN_REQUIRE(cond, what) \
  if (!(cond)) return Fail(CRANEPLAN_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* craneplan_version(void) { return "0.1.0"; }

const char* craneplan_last_error(void) { return g_last_error.c_str(); }

const char* craneplan_solve_status_name(craneplan_solve_status status) {
  switch (status) {
    case CRANEPLAN_SOLVE_CONVERGED: return "converged";
    case CRANEPLAN_SOLVE_MAX_ITER: return "max-iter";
    case CRANEPLAN_SOLVE_INFEASIBLE: return "infeasible";
    case CRANEPLAN_SOLVE_NUMERICAL_FAILURE: return "numerical-failure";
  }
  return "unknown";
}

craneplan_status craneplan_scenario_load(const char* path, craneplan_scenario** out) {
  CRANEPLAN_REQUIRE(path && out, "path and out must be non-null");
  *out = nullptr;
  return Guard([&] {
    *out = new craneplan_scenario{craneplan::LoadScenario(path)};
    return CRANEPLAN_OK;
  });
}

craneplan_status craneplan_scenario_parse(const char* text, craneplan_scenario** out) {
  CRANEPLAN_REQUIRE(text && out, "text and out must be non-null");
  *out = nullptr;
  return Guard([&] {
    *out = new craneplan_scenario{craneplan::ParseScenario(text)};
    return CRANEPLAN_OK;
  });
}

void craneplan_scenario_free(craneplan_scenario* scenario) { delete scenario; }

craneplan_status craneplan_scenario_render(const craneplan_scenario* scenario, char* buf,
                                           size_t cap, size_t* length) {
  CRANEPLAN_REQUIRE(scenario, "scenario must be non-null");
  CRANEPLAN_REQUIRE(buf || cap == 0, "buf is null but cap is nonzero");
  return Guard([&] {
    const std::string text = craneplan::RenderScenario(scenario->value);
    if (length) *length = text.size();
    if (cap > 0) {
      const size_t n = std::min(cap - 1, text.size());
      std::memcpy(buf, text.data(), n);
      buf[n] = '\0';
    }
    return CRANEPLAN_OK;
  });
}

craneplan_status craneplan_scenario_set_intervals(craneplan_scenario* scenario, int intervals) {
  CRANEPLAN_REQUIRE(scenario, "scenario must be non-null");
  CRANEPLAN_REQUIRE(intervals >= 2, "intervals must be >= 2");
  scenario->value.intervals = intervals;
  return CRANEPLAN_OK;
}

craneplan_status craneplan_scenario_set_tolerance(craneplan_scenario* scenario, double tol) {
  CRANEPLAN_REQUIRE(scenario, "scenario must be non-null");
  CRANEPLAN_REQUIRE(tol > 0.0, "tolerance must be positive");
  scenario->value.solver.tol = tol;
  return CRANEPLAN_OK;
}

craneplan_status craneplan_scenario_intervals(const craneplan_scenario* scenario, int* intervals) {
  CRANEPLAN_REQUIRE(scenario && intervals, "scenario and intervals must be non-null");
  *intervals = scenario->value.intervals;
  return CRANEPLAN_OK;
}

craneplan_status craneplan_scenario_check(const craneplan_scenario* scenario) {
  CRANEPLAN_REQUIRE(scenario, "scenario must be non-null");
  return Guard([&] {
    const craneplan::CheckResult check = craneplan::CheckScenario(scenario->value);
    return check.feasible ? CRANEPLAN_OK : Fail(CRANEPLAN_INFEASIBLE, check.message);
  });
}

craneplan_status craneplan_scenario_write_profile(const craneplan_scenario* scenario,
                                                  const char* path) {
  CRANEPLAN_REQUIRE(scenario && path, "scenario and path must be non-null");
  return Guard([&] {
    craneplan::WriteProfileCsv(scenario->value, std::filesystem::path(path));
    return CRANEPLAN_OK;
  });
}

craneplan_status craneplan_plan_run(const craneplan_scenario* scenario, craneplan_plan** out) {
  CRANEPLAN_REQUIRE(scenario && out, "scenario and out must be non-null");
  *out = nullptr;
  return Guard([&] {
    auto plan = std::make_unique<craneplan_plan>();
    plan->value = craneplan::Plan(scenario->value);
    const craneplan::SolveReport& r = plan->value.solve;
    *out = plan.release();
    switch (r.status) {
      case craneplan::SolveStatus::kConverged:
        return CRANEPLAN_OK;
      case craneplan::SolveStatus::kInfeasible:
        return Fail(CRANEPLAN_INFEASIBLE, "infeasible: " + r.message);
      default:
        return Fail(CRANEPLAN_NOT_CONVERGED, std::string(ToString(r.status)) + ": " + r.message);
    }
  });
}

void craneplan_plan_free(craneplan_plan* plan) { delete plan; }

craneplan_status craneplan_plan_summary(const craneplan_plan* plan, craneplan_summary* out) {
  CRANEPLAN_REQUIRE(plan && out, "plan and out must be non-null");
  const craneplan::PlanResult& p = plan->value;
  *out = {};
  out->solve_status = ToC(p.solve.status);
  out->objective = p.solve.objective;
  out->kkt_residual = p.solve.kkt_residual;
  out->iterations = p.solve.iterations;
  out->wall_time = p.solve.wall_time;
  out->intervals = p.intervals;
  out->num_variables = p.num_variables;
  out->num_constraints = p.num_constraints;
  out->has_validation = p.validation ? 1 : 0;
  if (p.validation) out->validation = ToC(*p.validation);
  return CRANEPLAN_OK;
}

craneplan_status craneplan_plan_write_csv(const craneplan_plan* plan, const char* path) {
  CRANEPLAN_REQUIRE(plan && path, "plan and path must be non-null");
  if (!plan->value.trajectory) return Fail(CRANEPLAN_NOT_CONVERGED, "plan has no trajectory");
  return Guard([&] {
    craneplan::WriteTrajectoryCsv(*plan->value.trajectory, std::filesystem::path(path));
    return CRANEPLAN_OK;
  });
}

craneplan_status craneplan_plan_write_report(const craneplan_plan* plan, const char* path) {
  CRANEPLAN_REQUIRE(plan && path, "plan and path must be non-null");
  return Guard([&] {
    std::ofstream file(path, std::ios::binary);
    if (!file) return Fail(CRANEPLAN_IO_ERROR, std::string("cannot open ") + path + " for writing");
    file << craneplan::RenderReportJson(plan->value);
    file.close();
    if (!file) return Fail(CRANEPLAN_IO_ERROR, std::string("failed writing ") + path);
    return CRANEPLAN_OK;
  });
}

craneplan_status craneplan_validate_csv(const craneplan_scenario* scenario, const char* csv_path,
                                        craneplan_validation* out) {
  CRANEPLAN_REQUIRE(scenario && csv_path && out, "scenario, csv_path and out must be non-null");
  return Guard([&] {
    const craneplan::Trajectory traj = craneplan::ReadTrajectoryCsv(std::filesystem::path(csv_path));
    *out = ToC(craneplan::ValidateTrajectory(traj, scenario->value));
    return CRANEPLAN_OK;
  });
}

}  // extern "C"
