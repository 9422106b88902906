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

#include <memory>
#include <vector>

#include <Eigen/Core>

#include "craneplan/collocation.hpp"
#include "craneplan/crane_model.hpp"
#include "craneplan/scenario.hpp"
#include "craneplan/stack_profile.hpp"

namespace craneplan {

// Multiplied-through trapezoidal defect of the spatial DAE v_p x' = g(x, u):
//
//   r_j = vbar (x_j^{k+1} - x_j^k) - delta (g_j^k + g_j^{k+1}) / 2,
//   vbar = (v_p^k + v_p^{k+1}) / 2,
//
// with the control held constant over the interval. Never divides by v_p, so
// rest at an endpoint node is representable.
struct CraneDefect {
  static constexpr int kStates = kNumStates;
  static constexpr int kControls = kNumControls;

  CraneParams params;

  template <typename T>
  void operator()(const T* sk, const T* sk1, const T* u, double delta, T* r) const {
    StateVector<T> a, b;
    for (int j = 0; j < kStates; ++j) {
      a[j] = sk[j];
      b[j] = sk1[j];
    }
    const ControlVector<T> uk{u[0], u[1]};
    const StateVector<T> ga = SpatialDaeRhs(a, uk, params);
    const StateVector<T> gb = SpatialDaeRhs(b, uk, params);
    const T vbar = T(0.5) * (a[kVp] + b[kVp]);
    for (int j = 0; j < kStates; ++j) {
      r[j] = vbar * (b[j] - a[j]) - T(0.5 * delta) * (ga[j] + gb[j]);
    }
  }
};

// Defect residuals for one interval. Throws kRopeLengthNonpositive if either
// node has l <= 0.
StateVector<double> Defect(const SpatialState& node_k, const SpatialState& node_k1,
                           const Controls& u, double delta, const CraneParams& params);

// N + 1 uniformly spaced positions on [x_start, x_end].
std::vector<double> MakeGrid(double x_start, double x_end, int intervals);
std::vector<double> MakeGrid(const Scenario& scenario);

// The crane's time-optimal NLP: objective t at the final node, stack ceilings
// as per-node y_p upper bounds.
class CraneNlp : public CollocationNlp<CraneDefect> {
 public:
  CraneNlp(const Scenario& scenario, std::vector<double> grid, std::vector<BoundSample> bounds,
           Config config);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<BoundSample>& bound_trace() const { return bound_trace_; }
  int num_defects() const { return layout().num_defects(); }
  int num_pins() const { return static_cast<int>(pins().size()); }

 private:
  std::vector<double> grid_;
  std::vector<BoundSample> bound_trace_;
};

// Checks the profile against the bounds and the boundary conditions for
// y_p = l cos(theta), then builds the NLP. Throws kInfeasibleProfile or
// kInconsistentBoundary.
std::unique_ptr<CraneNlp> Transcribe(const Scenario& scenario);

struct TrajectoryNode {
  double x_p = 0.0;
  SpatialState state;
  double stack_height = 0.0;  // s(x_p)
  double upper_bound = 0.0;   // h - s(x_p)
};

struct Trajectory {
  std::vector<TrajectoryNode> nodes;  // N + 1
  std::vector<Controls> controls;     // N, held over [x_p^k, x_p^{k+1}]
  double objective = 0.0;             // final time T

  int intervals() const { return static_cast<int>(controls.size()); }
};

// Unpacks a solution vector. Throws kDimensionMismatch on a length mismatch.
Trajectory Extract(const Scenario& scenario, const Eigen::VectorXd& solution);

// Inverse of Extract.
Eigen::VectorXd Pack(const Scenario& scenario, const Trajectory& trajectory);

}  // namespace craneplan
