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

#include <limits>

#include "craneplan/crane_model.hpp"
#include "craneplan/interior_point.hpp"
#include "craneplan/stack_profile.hpp"

namespace craneplan {

// Box limits on states and controls. The y_p ceiling is not here: it comes
// from the stack profile, node by node.
struct VariableBounds {
  double t_min = 0.0;
  double v_min_interior = 0.0;
  double v_max = std::numeric_limits<double>::infinity();
  double y_floor = 0.15;
  double l_min = 0.0;
  double l_max = 4.5;
  double theta_max = 0.1;  // |theta| <= theta_max
  double ft_min = -1.0;
  double ft_max = 1.0;
  double fh_min = 0.0;
  double fh_max = 8.0;

  friend bool operator==(const VariableBounds&, const VariableBounds&) = default;
};

// Rest-to-rest boundary values. `initial` pins every component; the time slot
// of `terminal` is ignored since the final time is the objective.
struct BoundaryConditions {
  SpatialState initial{0.0, 0.0, 3.0, 0.0, 3.0, 0.0, 0.0, 0.0};
  SpatialState terminal{0.0, 0.0, 3.0, 0.0, 3.0, 0.0, 0.0, 0.0};

  friend bool operator==(const BoundaryConditions&, const BoundaryConditions&) = default;
};

// One unit of planning work.
struct Scenario {
  CraneParams crane;
  StackProfile profile;
  double x_start = 0.0;
  double x_end = 1.0;
  BoundaryConditions boundary;
  VariableBounds bounds;
  int intervals = 100;
  double epsilon_v = 1e-2;  // interior payload-speed floor
  SolverOptions solver;

  // Lower bound on v_p at interior nodes.
  double interior_speed_floor() const;

  // Checks structural invariants: kInvalidArgument for bad sizes or boundary
  // values outside their bounds, kBoundsInverted for empty boxes.
  void Validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

}  // namespace craneplan
