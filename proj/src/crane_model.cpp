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

#include "craneplan/crane_model.hpp"

#include <cmath>
#include <sstream>

#include "craneplan/dual.hpp"
#include "craneplan/error.hpp"

namespace craneplan {
namespace {

void RequirePositiveRope(double l) {
  if (!(l > 0.0)) {
    std::ostringstream msg;
    msg << "rope length must be positive, got " << l;
    throw Error(ErrorCode::kRopeLengthNonpositive, msg.str());
  }
}

void RequirePositiveSpeed(double v_p) {
  if (!(v_p > 0.0)) {
    std::ostringstream msg;
    msg << "spatial dynamics undefined for payload speed " << v_p
        << "; use the multiplied-through form";
    throw Error(ErrorCode::kZeroVelocity, msg.str());
  }
}

template <typename T>
StateVector<T> SpatialRhs(const StateVector<T>& x, const ControlVector<T>& u,
                          const CraneParams& p) {
  StateVector<T> f = SpatialDaeRhs(x, u, p);
  for (auto& fj : f) fj = fj / x[kVp];
  return f;
}

}  // namespace

void CraneParams::Validate() const {
  if (!(m1 > 0.0 && m2 > 0.0 && g > 0.0 && h > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "crane parameters m1, m2, g, h must all be positive");
  }
}

StateVector<double> TimeState::ToArray() const {
  return {x_p, v_p, y_p, w_p, l, l_dot, theta, theta_dot};
}

TimeState TimeState::FromArray(const StateVector<double>& a) {
  return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
}

StateVector<double> SpatialState::ToArray() const {
  return {t, v_p, y_p, w_p, l, l_dot, theta, theta_dot};
}

SpatialState SpatialState::FromArray(const StateVector<double>& a) {
  return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
}

StateDerivative TimeDynamics(const TimeState& s, const Controls& u, const CraneParams& p) {
  RequirePositiveRope(s.l);
  return TimeRhs(s.ToArray(), u.ToArray(), p);
}

StateDerivative SpatialDynamics(const SpatialState& s, const Controls& u,
                                const CraneParams& p) {
  RequirePositiveRope(s.l);
  RequirePositiveSpeed(s.v_p);
  return SpatialRhs(s.ToArray(), u.ToArray(), p);
}

DynamicsJacobian Jacobians(const StateVector<double>& state, const Controls& u,
                           const CraneParams& p, DynamicsForm form) {
  RequirePositiveRope(state[kRope]);
  if (form == DynamicsForm::kSpatial) RequirePositiveSpeed(state[kVp]);

  using D = Dual<double, kNumStates + kNumControls>;
  StateVector<D> x;
  for (int j = 0; j < kNumStates; ++j) x[j] = D::Variable(state[j], j);
  const ControlVector<D> v{D::Variable(u.trolley_force, kNumStates),
                           D::Variable(u.hoist_force, kNumStates + 1)};
  const StateVector<D> f =
      form == DynamicsForm::kTime ? TimeRhs(x, v, p) : SpatialRhs(x, v, p);

  DynamicsJacobian jac;
  for (int r = 0; r < kNumStates; ++r) {
    for (int c = 0; c < kNumStates; ++c) jac.state(r, c) = f[r].derivative(c);
    for (int c = 0; c < kNumControls; ++c) jac.control(r, c) = f[r].derivative(kNumStates + c);
  }
  return jac;
}

double RecoverTrolley(double x_p, double l, double theta) {
  return x_p - l * std::sin(theta);
}

double RecoverTrolley(const TimeState& s) { return RecoverTrolley(s.x_p, s.l, s.theta); }

}  // namespace craneplan
