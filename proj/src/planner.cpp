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

#include "craneplan/planner.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "craneplan/error.hpp"

namespace craneplan {
namespace {

// JSON has no infinity; a failed re-simulation shows up as null.
nlohmann::json Number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

}  // namespace

CheckResult CheckScenario(const Scenario& scenario) {
  CheckResult result;
  std::unique_ptr<CraneNlp> nlp;
  try {
    nlp = Transcribe(scenario);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInfeasibleProfile && e.code() != ErrorCode::kInconsistentBoundary) {
      throw;
    }
    result.message = e.what();
    return result;
  }
  result.num_variables = nlp->num_variables();
  result.num_constraints = nlp->num_constraints();
  const Eigen::VectorXd lo = nlp->lower_bounds(), hi = nlp->upper_bounds();
  const CollocationLayout& layout = nlp->layout();
  for (int i = 0; i < lo.size(); ++i) {
    if (lo[i] > hi[i]) {
      std::ostringstream msg;
      msg << "empty box [" << lo[i] << ", " << hi[i] << "] for ";
      const int k = i / layout.stride(), j = i % layout.stride();
      if (j < layout.states) {
        msg << "state " << j << " at node " << k;
      } else {
        msg << "control " << j - layout.states << " of interval " << k;
      }
      result.message = msg.str();
      return result;
    }
  }
  result.feasible = true;
  return result;
}

PlanResult Plan(const Scenario& scenario, const IterationObserver& observer) {
  const std::unique_ptr<CraneNlp> nlp = Transcribe(scenario);
  PlanResult result;
  result.intervals = scenario.intervals;
  result.num_variables = nlp->num_variables();
  result.num_constraints = nlp->num_constraints();

  const InteriorPointSolver solver(scenario.solver, observer);
  const SolveResult solved = solver.Solve(*nlp);
  result.solve = solved.report;
  if (solved.report.status == SolveStatus::kConverged) {
    result.trajectory = Extract(scenario, solved.x);
    // Pins hold to round-off; write back the exact boundary values.
    std::vector<TrajectoryNode>& nodes = result.trajectory->nodes;
    const double t_final = nodes.back().state.t;
    nodes.front().state = scenario.boundary.initial;
    nodes.back().state = scenario.boundary.terminal;
    nodes.back().state.t = t_final;
    result.validation = ValidateTrajectory(*result.trajectory, scenario);
  }
  return result;
}

std::string RenderReportJson(const PlanResult& result) {
  nlohmann::ordered_json doc;
  const SolveReport& s = result.solve;
  doc["status"] = ToString(s.status);
  doc["message"] = s.message;
  doc["objective"] = Number(s.objective);
  doc["kkt_residual"] = Number(s.kkt_residual);
  doc["iterations"] = s.iterations;
  doc["wall_time"] = s.wall_time;
  doc["intervals"] = result.intervals;
  doc["num_variables"] = result.num_variables;
  doc["num_constraints"] = result.num_constraints;
  if (result.validation) {
    const ValidationReport& v = *result.validation;
    nlohmann::ordered_json val;
    val["terminal_error"] = Number(v.terminal_error);
    val["max_clearance_violation"] = Number(v.max_clearance_violation);
    val["max_floor_violation"] = Number(v.max_floor_violation);
    val["sway_peak"] = Number(v.sway_peak);
    val["time_monotone"] = v.time_monotone;
    val["lower_bound"] = v.lower_bound;
    val["lower_bound_ok"] = v.lower_bound_ok;
    val["node_bound_violation"] = Number(v.node_bound_violation);
    val["node_deviation"] = Number(v.node_deviation);
    doc["validation"] = val;
  } else {
    doc["validation"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace craneplan
