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

#include "craneplan/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "craneplan/error.hpp"

namespace craneplan {
namespace {

StateVector<double> Rhs(const StateVector<double>& x, const Controls& u, const CraneParams& p) {
  if (!(x[kRope] > 0.0) || !std::isfinite(x[kRope])) {
    throw Error(ErrorCode::kSimulationBlowup, "rope length left (0, inf) during re-simulation");
  }
  return TimeRhs(x, u.ToArray(), p);
}

StateVector<double> Rk4Step(const StateVector<double>& x, const Controls& u, double h,
                            const CraneParams& p) {
  auto axpy = [](const StateVector<double>& a, double s, const StateVector<double>& b) {
    StateVector<double> out;
    for (int j = 0; j < kNumStates; ++j) out[j] = a[j] + s * b[j];
    return out;
  };
  const StateVector<double> k1 = Rhs(x, u, p);
  const StateVector<double> k2 = Rhs(axpy(x, 0.5 * h, k1), u, p);
  const StateVector<double> k3 = Rhs(axpy(x, 0.5 * h, k2), u, p);
  const StateVector<double> k4 = Rhs(axpy(x, h, k3), u, p);
  StateVector<double> out;
  for (int j = 0; j < kNumStates; ++j) {
    out[j] = x[j] + h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  }
  return out;
}

// Time-domain state at a planned node; x_p comes from the grid.
TimeState NodeTimeState(const TrajectoryNode& node) {
  const SpatialState& s = node.state;
  return {node.x_p, s.v_p, s.y_p, s.w_p, s.l, s.l_dot, s.theta, s.theta_dot};
}

}  // namespace

DenseTrajectory SimulateTimeDomain(const Trajectory& trajectory, const Scenario& scenario,
                                   int steps) {
  const auto& nodes = trajectory.nodes;
  if (nodes.size() < 2 || trajectory.controls.size() + 1 != nodes.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "trajectory needs N + 1 nodes and N controls");
  }
  if (steps < 1) throw Error(ErrorCode::kInvalidArgument, "steps must be positive");
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    if (!(nodes[k + 1].state.t > nodes[k].state.t)) {
      std::ostringstream msg;
      msg << "node times not increasing at node " << k + 1;
      throw Error(ErrorCode::kInvalidArgument, msg.str());
    }
  }

  const double t0 = nodes.front().state.t;
  const double h_max = (nodes.back().state.t - t0) / steps;
  DenseTrajectory dense;
  dense.samples.reserve(steps + nodes.size());
  dense.node_samples.reserve(nodes.size());

  StateVector<double> x = NodeTimeState(nodes.front()).ToArray();
  double t = t0;
  for (int k = 0; k < trajectory.intervals(); ++k) {
    const double t_end = nodes[k + 1].state.t;
    const Controls& u = trajectory.controls[k];
    dense.node_samples.push_back(static_cast<int>(dense.samples.size()));
    const int substeps = std::max(1, static_cast<int>(std::ceil((t_end - t) / h_max - 1e-9)));
    const double h = (t_end - t) / substeps;
    for (int i = 0; i < substeps; ++i) {
      dense.samples.push_back({t, TimeState::FromArray(x), k});
      x = Rk4Step(x, u, h, scenario.crane);
      t = i + 1 == substeps ? t_end : t + h;
    }
    for (double v : x) {
      if (!std::isfinite(v)) throw Error(ErrorCode::kSimulationBlowup, "state diverged");
    }
  }
  dense.node_samples.push_back(static_cast<int>(dense.samples.size()));
  dense.samples.push_back({t, TimeState::FromArray(x), trajectory.intervals() - 1});
  return dense;
}

ClearanceSummary CheckClearance(std::span<const DenseSample> samples, const StackProfile& profile,
                                const CraneParams& params, double y_floor) {
  ClearanceSummary out;
  for (const DenseSample& s : samples) {
    const double ceiling = params.h - profile.HeightAt(s.state.x_p);
    out.max_clearance_violation = std::max(out.max_clearance_violation, s.state.y_p - ceiling);
    out.max_floor_violation = std::max(out.max_floor_violation, y_floor - s.state.y_p);
    out.sway_peak = std::max(out.sway_peak, std::abs(s.state.theta));
  }
  return out;
}

double AnalyticLowerBound(const Scenario& scenario) {
  const double d = std::abs(scenario.x_end - scenario.x_start);
  const double mass = scenario.crane.m1 + scenario.crane.m2;
  const double accel = scenario.bounds.ft_max;
  const double brake = -scenario.bounds.ft_min;
  if (!(accel > 0.0)) throw Error(ErrorCode::kInvalidArgument, "F_t upper bound must be positive");
  // Accelerate for T_a, brake for T_b with accel T_a = brake T_b.
  const double inv = brake > 0.0 ? 1.0 / accel + 1.0 / brake : 1.0 / accel;
  return std::sqrt(2.0 * d * mass * inv);
}

ValidationReport ValidateTrajectory(const Trajectory& trajectory, const Scenario& scenario) {
  ValidationReport report;
  const auto& nodes = trajectory.nodes;

  report.time_monotone = true;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    if (!(nodes[k + 1].state.t > nodes[k].state.t)) report.time_monotone = false;
  }
  for (const TrajectoryNode& node : nodes) {
    const double ceiling = scenario.crane.h - scenario.profile.HeightAt(node.x_p);
    report.node_bound_violation = std::max(report.node_bound_violation, node.state.y_p - ceiling);
  }
  report.lower_bound = AnalyticLowerBound(scenario);
  report.lower_bound_ok = trajectory.objective >= report.lower_bound;
  if (!report.time_monotone) {
    // No re-simulation is possible; report the simulated quantities as failed.
    constexpr double kInf = std::numeric_limits<double>::infinity();
    report.terminal_error = report.max_clearance_violation = report.max_floor_violation = kInf;
    report.sway_peak = report.node_deviation = kInf;
    return report;
  }

  const DenseTrajectory dense = SimulateTimeDomain(trajectory, scenario);
  const ClearanceSummary clear =
      CheckClearance(dense.samples, scenario.profile, scenario.crane, scenario.bounds.y_floor);
  report.max_clearance_violation = clear.max_clearance_violation;
  report.max_floor_violation = clear.max_floor_violation;
  report.sway_peak = clear.sway_peak;

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const StateVector<double> sim = dense.samples[dense.node_samples[k]].state.ToArray();
    const StateVector<double> plan = NodeTimeState(nodes[k]).ToArray();
    for (int j = 0; j < kNumStates; ++j) {
      report.node_deviation = std::max(report.node_deviation, std::abs(sim[j] - plan[j]));
    }
  }

  const SpatialState& target = scenario.boundary.terminal;
  const TimeState goal{scenario.x_end, target.v_p, target.y_p, target.w_p,
                       target.l,       target.l_dot, target.theta, target.theta_dot};
  const StateVector<double> end = dense.samples.back().state.ToArray();
  const StateVector<double> want = goal.ToArray();
  for (int j = 0; j < kNumStates; ++j) {
    report.terminal_error = std::max(report.terminal_error, std::abs(end[j] - want[j]));
  }
  return report;
}

}  // namespace craneplan
