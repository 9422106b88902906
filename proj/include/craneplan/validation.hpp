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

#include <span>
#include <vector>

#include "craneplan/crane_model.hpp"
#include "craneplan/scenario.hpp"
#include "craneplan/stack_profile.hpp"
#include "craneplan/transcription.hpp"

namespace craneplan {

// One point of a time-domain re-simulation.
struct DenseSample {
  double t = 0.0;
  TimeState state;
  int interval = 0;  // control interval applied from this sample onward
};

struct DenseTrajectory {
  std::vector<DenseSample> samples;  // sorted by t
  std::vector<int> node_samples;     // samples[node_samples[k]] sits at node time t_k
};

// Integrates the time-domain dynamics from the first node with classical RK4,
// holding controls[k] on [t_k, t_{k+1}). Steps are at most T / steps and never
// straddle a node time, so every node time is a sample. Throws
// kSimulationBlowup if the rope length reaches zero or the state stops being
// finite, and kInvalidArgument if node times are not increasing.
DenseTrajectory SimulateTimeDomain(const Trajectory& trajectory, const Scenario& scenario,
                                   int steps = 5000);

struct ClearanceSummary {
  double max_clearance_violation = 0.0;  // max (y_p - (h - s(x_p)))+
  double max_floor_violation = 0.0;      // max (y_floor - y_p)+
  double sway_peak = 0.0;                // max |theta|
};

// Evaluates the stack ceiling at every sample, not only at nodes.
ClearanceSummary CheckClearance(std::span<const DenseSample> samples, const StackProfile& profile,
                                const CraneParams& params, double y_floor);

// Rest-to-rest time of the sway-free rigid body of mass m1 + m2 over the path
// length under the trolley force limits: accelerate at F_t_max, brake at
// |F_t_min|. With symmetric limits this is 2 sqrt(d (m1 + m2) / F_t_max).
// A crane that must also damp sway cannot do better.
double AnalyticLowerBound(const Scenario& scenario);

struct ValidationReport {
  double terminal_error = 0.0;  // inf-norm vs terminal targets (x_p, then the 7 non-time states)
  double max_clearance_violation = 0.0;
  double max_floor_violation = 0.0;
  double sway_peak = 0.0;
  bool time_monotone = false;
  bool lower_bound_ok = false;
  double lower_bound = 0.0;
  double node_bound_violation = 0.0;  // max (y_p^k - (h - s(x_p^k)))+ over nodes
  double node_deviation = 0.0;        // inf-norm of simulated minus planned state at node times
};

// Full certificate: re-simulation, clearance, terminal mismatch and bounds.
// Simulated fields are +inf when node times are not increasing.
ValidationReport ValidateTrajectory(const Trajectory& trajectory, const Scenario& scenario);

}  // namespace craneplan
