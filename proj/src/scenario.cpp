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

#include "craneplan/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "craneplan/error.hpp"

namespace craneplan {
namespace {

void RequireOrdered(double lo, double hi, const char* what) {
  if (!(lo <= hi)) {
    std::ostringstream msg;
    msg << "bounds inverted for " << what << ": " << lo << " > " << hi;
    throw Error(ErrorCode::kBoundsInverted, msg.str());
  }
}

void RequireWithin(double value, double lo, double hi, const char* what) {
  if (!(value >= lo && value <= hi)) {
    std::ostringstream msg;
    msg << "boundary value " << what << " = " << value << " outside [" << lo << ", " << hi << "]";
    throw Error(ErrorCode::kInvalidArgument, msg.str());
  }
}

}  // namespace

double Scenario::interior_speed_floor() const {
  return std::max(bounds.v_min_interior, epsilon_v);
}

void Scenario::Validate() const {
  crane.Validate();
  solver.Validate();
  if (!(x_end > x_start)) throw Error(ErrorCode::kInvalidArgument, "x_end must exceed x_start");
  if (intervals < 2) throw Error(ErrorCode::kInvalidArgument, "need at least 2 intervals");
  if (!(epsilon_v > 0.0)) throw Error(ErrorCode::kInvalidArgument, "epsilon_v must be positive");

  const VariableBounds& b = bounds;
  RequireOrdered(b.l_min, b.l_max, "l");
  RequireOrdered(0.0, b.theta_max, "theta");
  RequireOrdered(b.ft_min, b.ft_max, "F_t");
  RequireOrdered(b.fh_min, b.fh_max, "F_h");
  RequireOrdered(b.y_floor, crane.h, "y_p");
  RequireOrdered(0.0, b.v_max, "v_p");

  const SpatialState& s0 = boundary.initial;
  const SpatialState& sf = boundary.terminal;
  RequireWithin(s0.t, b.t_min, INFINITY, "t_0");
  for (const auto* s : {&s0, &sf}) {
    const bool first = s == &s0;
    RequireWithin(s->v_p, 0.0, b.v_max, first ? "v_p_0" : "v_p_f");
    RequireWithin(s->y_p, b.y_floor, crane.h, first ? "y_p_0" : "y_p_f");
    RequireWithin(s->l, b.l_min, b.l_max, first ? "l_0" : "l_f");
    RequireWithin(s->theta, -b.theta_max, b.theta_max, first ? "theta_0" : "theta_f");
  }
}

}  // namespace craneplan
