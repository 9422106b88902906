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

#pragma once

#include <optional>
#include <string>

#include "craneplan/interior_point.hpp"
#include "craneplan/scenario.hpp"
#include "craneplan/transcription.hpp"
#include "craneplan/validation.hpp"

namespace craneplan {

// Outcome of the pre-solve checks.
struct CheckResult {
  bool feasible = false;
  std::string message;  // first problem found, empty when feasible
  int num_variables = 0;
  int num_constraints = 0;
};

// Profile against the y_p floor, boundary consistency and empty variable
// boxes. Infeasibility is reported in the result; malformed scenarios throw.
CheckResult CheckScenario(const Scenario& scenario);

struct PlanResult {
  SolveReport solve;
  int intervals = 0;
  int num_variables = 0;
  int num_constraints = 0;
  std::optional<Trajectory> trajectory;        // only when converged
  std::optional<ValidationReport> validation;  // only when converged
};

// Transcribe, solve, extract, validate. Throws for infeasible profiles and
// inconsistent boundaries; solver failures are reported in `solve`.
PlanResult Plan(const Scenario& scenario, const IterationObserver& observer = {});

// JSON document with the solve report, problem size and validation report.
std::string RenderReportJson(const PlanResult& result);

}  // namespace craneplan
