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
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "craneplan/dual.hpp"
#include "craneplan/error.hpp"
#include "craneplan/nlp.hpp"

namespace craneplan {

// Decision-vector layout of a node/interval transcription. Variables are
// interleaved per node, [s_0, u_0, s_1, u_1, ..., s_{N-1}, u_{N-1}, s_N], so
// every defect block touches one contiguous window.
struct CollocationLayout {
  int states = 0;
  int controls = 0;
  int intervals = 0;

  int stride() const { return states + controls; }
  int num_nodes() const { return intervals + 1; }
  int num_variables() const { return num_nodes() * states + intervals * controls; }
  int num_defects() const { return intervals * states; }
  int state_index(int node, int j) const { return node * stride() + j; }
  int control_index(int interval, int i) const { return interval * stride() + states + i; }
};

// Equality pin x[state_index(node, state)] = value.
struct Pin {
  int node;
  int state;
  double value;
};

// Generic direct-collocation NLP: one defect block per interval, boundary
// pins, and a linear objective equal to one state at one node.
//
// `Defect` supplies kStates, kControls and a call operator templated on the
// scalar type:
//
//   template <typename T>
//   void operator()(const T* s_k, const T* s_k1, const T* u_k, double delta, T* r) const;
//
// Jacobians and Lagrangian Hessians come from forward-mode dual numbers over
// that single definition.
template <typename Defect>
class CollocationNlp : public NlpProblem {
 public:
  static constexpr int kStates = Defect::kStates;
  static constexpr int kControls = Defect::kControls;
  static constexpr int kBlock = 2 * kStates + kControls;

  struct Config {
    int intervals = 0;
    double delta = 0.0;
    Eigen::VectorXd lower, upper, initial;
    std::vector<Pin> pins;
    int objective_node = 0;
    int objective_state = 0;
  };

  CollocationNlp(Defect defect, Config config)
      : defect_(std::move(defect)),
        config_(std::move(config)),
        layout_{kStates, kControls, config_.intervals} {
    const int n = layout_.num_variables();
    if (config_.lower.size() != n || config_.upper.size() != n || config_.initial.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "collocation bound/guess vectors have wrong size");
    }
  }

  const CollocationLayout& layout() const { return layout_; }
  const Defect& defect() const { return defect_; }
  double delta() const { return config_.delta; }
  const std::vector<Pin>& pins() const { return config_.pins; }
  int objective_index() const {
    return layout_.state_index(config_.objective_node, config_.objective_state);
  }

  int num_variables() const override { return layout_.num_variables(); }
  int num_constraints() const override {
    return layout_.num_defects() + static_cast<int>(config_.pins.size());
  }
  Eigen::VectorXd lower_bounds() const override { return config_.lower; }
  Eigen::VectorXd upper_bounds() const override { return config_.upper; }
  Eigen::VectorXd initial_point() const override { return config_.initial; }

  double Objective(const Eigen::VectorXd& x) const override { return x[objective_index()]; }

  Eigen::VectorXd ObjectiveGradient(const Eigen::VectorXd& x) const override {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(x.size());
    g[objective_index()] = 1.0;
    return g;
  }

  Eigen::VectorXd Constraints(const Eigen::VectorXd& x) const override {
    Eigen::VectorXd c(num_constraints());
    for (int k = 0; k < layout_.intervals; ++k) {
      std::array<double, kBlock> z = Gather<double>(x, k);
      EvalDefect(z.data(), c.data() + k * kStates);
    }
    for (std::size_t p = 0; p < config_.pins.size(); ++p) {
      const Pin& pin = config_.pins[p];
      c[layout_.num_defects() + p] = x[layout_.state_index(pin.node, pin.state)] - pin.value;
    }
    return c;
  }

  void ConstraintJacobian(const Eigen::VectorXd& x, std::vector<Triplet>* out) const override {
    using D = Dual<double, kBlock>;
    out->reserve(out->size() + layout_.num_defects() * kBlock + config_.pins.size());
    for (int k = 0; k < layout_.intervals; ++k) {
      std::array<D, kBlock> z;
      for (int b = 0; b < kBlock; ++b) z[b] = D::Variable(x[BlockIndex(k, b)], b);
      std::array<D, kStates> r;
      EvalDefect(z.data(), r.data());
      for (int j = 0; j < kStates; ++j) {
        for (int b = 0; b < kBlock; ++b) {
          out->emplace_back(k * kStates + j, BlockIndex(k, b), r[j].derivative(b));
        }
      }
    }
    for (std::size_t p = 0; p < config_.pins.size(); ++p) {
      const Pin& pin = config_.pins[p];
      out->emplace_back(layout_.num_defects() + static_cast<int>(p),
                        layout_.state_index(pin.node, pin.state), 1.0);
    }
  }

  void LagrangianHessian(const Eigen::VectorXd& x, double /*obj_factor*/,
                         const Eigen::VectorXd& lambda,
                         std::vector<Triplet>* out) const override {
    // The objective is linear and pins are affine: only defects contribute.
    using H = HessianDual<kBlock>;
    out->reserve(out->size() + layout_.intervals * kBlock * (kBlock + 1) / 2);
    for (int k = 0; k < layout_.intervals; ++k) {
      std::array<H, kBlock> z;
      for (int b = 0; b < kBlock; ++b) z[b] = SeedHessianVariable<kBlock>(x[BlockIndex(k, b)], b);
      std::array<H, kStates> r;
      EvalDefect(z.data(), r.data());
      H weighted(0.0);
      for (int j = 0; j < kStates; ++j) weighted += r[j] * H(lambda[k * kStates + j]);
      for (int a = 0; a < kBlock; ++a) {
        for (int b = 0; b <= a; ++b) {
          const int ia = BlockIndex(k, a), ib = BlockIndex(k, b);
          out->emplace_back(std::max(ia, ib), std::min(ia, ib), weighted.derivative(a).derivative(b));
        }
      }
    }
  }

  // Maps block slot b of interval k (s_k, s_{k+1}, u_k) to a decision index.
  int BlockIndex(int k, int b) const {
    if (b < kStates) return layout_.state_index(k, b);
    if (b < 2 * kStates) return layout_.state_index(k + 1, b - kStates);
    return layout_.control_index(k, b - 2 * kStates);
  }

 private:
  template <typename T>
  std::array<T, kBlock> Gather(const Eigen::VectorXd& x, int k) const {
    std::array<T, kBlock> z;
    for (int b = 0; b < kBlock; ++b) z[b] = T(x[BlockIndex(k, b)]);
    return z;
  }

  template <typename T>
  void EvalDefect(const T* z, T* r) const {
    defect_(z, z + kStates, z + 2 * kStates, config_.delta, r);
  }

  Defect defect_;
  Config config_;
  CollocationLayout layout_;
};

}  // namespace craneplan
