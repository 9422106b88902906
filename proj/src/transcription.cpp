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

#include "craneplan/transcription.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "craneplan/error.hpp"

namespace craneplan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGuessSpeed = 0.2;       // m/s, interior initial guess
constexpr double kConsistencyTol = 1e-9;  // m, boundary y_p vs l cos(theta)

void CheckBoundaryConsistency(const SpatialState& s, const char* which) {
  const double expected = s.l * std::cos(s.theta);
  if (std::abs(s.y_p - expected) > kConsistencyTol * std::max(1.0, std::abs(expected))) {
    std::ostringstream msg;
    msg << which << " boundary has y_p = " << s.y_p << " but l cos(theta) = " << expected;
    throw Error(ErrorCode::kInconsistentBoundary, msg.str());
  }
}

}  // namespace

StateVector<double> Defect(const SpatialState& node_k, const SpatialState& node_k1,
                           const Controls& u, double delta, const CraneParams& params) {
  if (!(node_k.l > 0.0) || !(node_k1.l > 0.0)) {
    throw Error(ErrorCode::kRopeLengthNonpositive, "defect evaluated with rope length <= 0");
  }
  const StateVector<double> a = node_k.ToArray(), b = node_k1.ToArray();
  const ControlVector<double> v = u.ToArray();
  StateVector<double> r;
  CraneDefect{params}(a.data(), b.data(), v.data(), delta, r.data());
  return r;
}

std::vector<double> MakeGrid(double x_start, double x_end, int intervals) {
  if (intervals < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 intervals");
  std::vector<double> grid(intervals + 1);
  const double step = (x_end - x_start) / intervals;
  for (int k = 0; k <= intervals; ++k) grid[k] = x_start + k * step;
  grid.back() = x_end;
  return grid;
}

std::vector<double> MakeGrid(const Scenario& scenario) {
  return MakeGrid(scenario.x_start, scenario.x_end, scenario.intervals);
}

CraneNlp::CraneNlp(const Scenario& scenario, std::vector<double> grid,
                   std::vector<BoundSample> bounds, Config config)
    : CollocationNlp<CraneDefect>(CraneDefect{scenario.crane}, std::move(config)),
      grid_(std::move(grid)),
      bound_trace_(std::move(bounds)) {}

std::unique_ptr<CraneNlp> Transcribe(const Scenario& scenario) {
  scenario.Validate();
  const BoundaryConditions& bc = scenario.boundary;
  CheckBoundaryConsistency(bc.initial, "initial");
  CheckBoundaryConsistency(bc.terminal, "terminal");

  const int n_int = scenario.intervals;
  std::vector<double> grid = MakeGrid(scenario);
  std::vector<BoundSample> ceiling =
      SampleBounds(scenario.profile, scenario.crane, grid, scenario.bounds.y_floor);

  const CollocationLayout layout{kNumStates, kNumControls, n_int};
  const int n = layout.num_variables();
  const VariableBounds& vb = scenario.bounds;
  const double delta = (scenario.x_end - scenario.x_start) / n_int;

  CollocationNlp<CraneDefect>::Config config;
  config.intervals = n_int;
  config.delta = delta;
  config.lower = Eigen::VectorXd::Constant(n, -kInf);
  config.upper = Eigen::VectorXd::Constant(n, kInf);
  config.initial = Eigen::VectorXd::Zero(n);

  const StateVector<double> s0 = bc.initial.ToArray();
  const StateVector<double> sf = bc.terminal.ToArray();
  for (int k = 0; k <= n_int; ++k) {
    const bool endpoint = k == 0 || k == n_int;
    auto set = [&](int j, double lo, double hi) {
      config.lower[layout.state_index(k, j)] = lo;
      config.upper[layout.state_index(k, j)] = hi;
    };
    set(kSlot0, vb.t_min, kInf);
    set(kVp, endpoint ? 0.0 : scenario.interior_speed_floor(), vb.v_max);
    set(kYp, vb.y_floor, ceiling[k].upper_bound);
    set(kRope, vb.l_min, vb.l_max);
    set(kTheta, -vb.theta_max, vb.theta_max);

    const double frac = static_cast<double>(k) / n_int;
    for (int j = 0; j < kNumStates; ++j) {
      config.initial[layout.state_index(k, j)] = (1.0 - frac) * s0[j] + frac * sf[j];
    }
    config.initial[layout.state_index(k, kSlot0)] = s0[kSlot0] + k * delta / kGuessSpeed;
    if (!endpoint) config.initial[layout.state_index(k, kVp)] = kGuessSpeed;
  }
  for (int k = 0; k < n_int; ++k) {
    config.lower[layout.control_index(k, 0)] = vb.ft_min;
    config.upper[layout.control_index(k, 0)] = vb.ft_max;
    config.lower[layout.control_index(k, 1)] = vb.fh_min;
    config.upper[layout.control_index(k, 1)] = vb.fh_max;
    config.initial[layout.control_index(k, 0)] = 0.0;
    config.initial[layout.control_index(k, 1)] = scenario.crane.m2 * scenario.crane.g;
  }

  for (int j = 0; j < kNumStates; ++j) config.pins.push_back({0, j, s0[j]});
  for (int j = 1; j < kNumStates; ++j) config.pins.push_back({n_int, j, sf[j]});
  // A pin that sits exactly on a bound of its own variable (t_0 = 0, rest at
  // the endpoints) makes that bound redundant, and an interior-point method
  // cannot keep a strictly interior iterate there. Such bounds are dropped;
  // the feasible set is unchanged.
  for (const Pin& pin : config.pins) {
    const int i = layout.state_index(pin.node, pin.state);
    if (pin.value == config.lower[i]) config.lower[i] = -kInf;
    if (pin.value == config.upper[i]) config.upper[i] = kInf;
  }
  config.objective_node = n_int;
  config.objective_state = kSlot0;

  return std::make_unique<CraneNlp>(scenario, std::move(grid), std::move(ceiling),
                                    std::move(config));
}

Trajectory Extract(const Scenario& scenario, const Eigen::VectorXd& solution) {
  const CollocationLayout layout{kNumStates, kNumControls, scenario.intervals};
  if (solution.size() != layout.num_variables()) {
    std::ostringstream msg;
    msg << "solution has " << solution.size() << " entries, layout expects "
        << layout.num_variables();
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
  const std::vector<double> grid = MakeGrid(scenario);
  Trajectory traj;
  traj.nodes.resize(grid.size());
  for (int k = 0; k < layout.num_nodes(); ++k) {
    StateVector<double> s;
    for (int j = 0; j < kNumStates; ++j) s[j] = solution[layout.state_index(k, j)];
    TrajectoryNode& node = traj.nodes[k];
    node.x_p = grid[k];
    node.state = SpatialState::FromArray(s);
    node.stack_height = scenario.profile.HeightAt(grid[k]);
    node.upper_bound = scenario.crane.h - node.stack_height;
  }
  traj.controls.resize(layout.intervals);
  for (int k = 0; k < layout.intervals; ++k) {
    traj.controls[k] = {solution[layout.control_index(k, 0)], solution[layout.control_index(k, 1)]};
  }
  traj.objective = traj.nodes.back().state.t;
  return traj;
}

Eigen::VectorXd Pack(const Scenario& scenario, const Trajectory& trajectory) {
  const CollocationLayout layout{kNumStates, kNumControls, scenario.intervals};
  if (trajectory.intervals() != layout.intervals ||
      static_cast<int>(trajectory.nodes.size()) != layout.num_nodes()) {
    throw Error(ErrorCode::kDimensionMismatch, "trajectory size disagrees with scenario");
  }
  Eigen::VectorXd v(layout.num_variables());
  for (int k = 0; k < layout.num_nodes(); ++k) {
    const StateVector<double> s = trajectory.nodes[k].state.ToArray();
    for (int j = 0; j < kNumStates; ++j) v[layout.state_index(k, j)] = s[j];
  }
  for (int k = 0; k < layout.intervals; ++k) {
    v[layout.control_index(k, 0)] = trajectory.controls[k].trolley_force;
    v[layout.control_index(k, 1)] = trajectory.controls[k].hoist_force;
  }
  return v;
}

}  // namespace craneplan
