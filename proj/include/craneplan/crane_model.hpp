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

#include <array>

#include <Eigen/Core>

namespace craneplan {

// Physical constants of the trolley/payload system. Units: kg, m/s^2, m.
struct CraneParams {
  double m1 = 1.2;   // trolley mass
  double m2 = 0.6;   // payload mass
  double g = 9.81;
  double h = 4.5;    // trolley height above ground

  // Throws kInvalidArgument unless every field is strictly positive.
  void Validate() const;

  friend bool operator==(const CraneParams&, const CraneParams&) = default;
};

// Component layout shared by both state vectors. Slot 0 is the payload
// horizontal position in the time form and elapsed time in the spatial form;
// slots 1..7 coincide.
enum StateIndex : int {
  kSlot0 = 0,
  kVp = 1,
  kYp = 2,
  kWp = 3,
  kRope = 4,
  kRopeRate = 5,
  kTheta = 6,
  kThetaRate = 7,
};
inline constexpr int kNumStates = 8;
inline constexpr int kNumControls = 2;

template <typename T>
using StateVector = std::array<T, kNumStates>;
template <typename T>
using ControlVector = std::array<T, kNumControls>;

// Time-parametrized state. y_p is measured downward from the trolley.
struct TimeState {
  double x_p = 0.0;
  double v_p = 0.0;
  double y_p = 0.0;
  double w_p = 0.0;
  double l = 0.0;
  double l_dot = 0.0;
  double theta = 0.0;
  double theta_dot = 0.0;

  StateVector<double> ToArray() const;
  static TimeState FromArray(const StateVector<double>& a);
};

// State parametrized by the payload horizontal coordinate; time is a state.
struct SpatialState {
  double t = 0.0;
  double v_p = 0.0;
  double y_p = 0.0;
  double w_p = 0.0;
  double l = 0.0;
  double l_dot = 0.0;
  double theta = 0.0;
  double theta_dot = 0.0;

  StateVector<double> ToArray() const;
  static SpatialState FromArray(const StateVector<double>& a);

  friend bool operator==(const SpatialState&, const SpatialState&) = default;
};

struct Controls {
  double trolley_force = 0.0;  // F_t, N
  double hoist_force = 0.0;    // F_h, N

  ControlVector<double> ToArray() const { return {trolley_force, hoist_force}; }
};

using StateDerivative = StateVector<double>;

// Right-hand side of the time-domain equations of motion. Generic over the
// scalar so the same code path produces values and AD derivatives. Only slots
// 1..7 of the state are read.
template <typename T>
StateVector<T> TimeRhs(const StateVector<T>& x, const ControlVector<T>& u,
                       const CraneParams& p) {
  using std::cos;
  using std::sin;
  const T s7 = sin(x[kTheta]);
  const T c7 = cos(x[kTheta]);
  // Trolley acceleration, shared by the hoist and sway rows.
  const T trolley_acc = (u[0] + u[1] * s7) / p.m1;
  StateVector<T> f;
  f[0] = x[kVp];
  f[kVp] = -(u[1] * s7) / p.m2;
  f[kYp] = x[kWp];
  f[kWp] = -(u[1] * c7) / p.m2 + p.g;
  f[kRope] = x[kRopeRate];
  f[kRopeRate] = x[kRope] * x[kThetaRate] * x[kThetaRate] + p.g * c7 - u[1] / p.m2 -
                 s7 * trolley_acc;
  f[kTheta] = x[kThetaRate];
  f[kThetaRate] =
      -(T(2.0) * x[kRopeRate] * x[kThetaRate] + p.g * s7 + c7 * trolley_acc) / x[kRope];
  return f;
}

// Right-hand side of the spatial DAE written as v_p * x' = g(x, u): identical
// to TimeRhs except that the time slot advances at unit rate.
template <typename T>
StateVector<T> SpatialDaeRhs(const StateVector<T>& x, const ControlVector<T>& u,
                             const CraneParams& p) {
  StateVector<T> f = TimeRhs(x, u, p);
  f[0] = T(1.0);
  return f;
}

StateDerivative TimeDynamics(const TimeState& s, const Controls& u, const CraneParams& p);

// d/dx_p of the spatial state. Requires v_p > 0.
StateDerivative SpatialDynamics(const SpatialState& s, const Controls& u,
                                const CraneParams& p);

enum class DynamicsForm { kTime, kSpatial };

struct DynamicsJacobian {
  Eigen::Matrix<double, kNumStates, kNumStates> state;
  Eigen::Matrix<double, kNumStates, kNumControls> control;
};

// Jacobians of TimeDynamics or SpatialDynamics at (state, u). `state` is
// interpreted in the layout of the selected form.
DynamicsJacobian Jacobians(const StateVector<double>& state, const Controls& u,
                           const CraneParams& p, DynamicsForm form);

// Trolley position from the payload position: x = x_p - l sin(theta).
double RecoverTrolley(double x_p, double l, double theta);
double RecoverTrolley(const TimeState& s);

}  // namespace craneplan
