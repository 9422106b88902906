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

#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace craneplan {

using Triplet = Eigen::Triplet<double>;

// Smooth nonlinear program
//
//   minimize f(x)  subject to  c(x) = 0,  lower <= x <= upper.
//
// Infinite bounds are expressed with +-infinity. Sparse derivative callbacks
// must emit the same (row, col) pattern on every call, zeros included; the
// solver analyses the structure once and reuses it. Implementations are
// expected to be reentrant.
class NlpProblem {
 public:
  virtual ~NlpProblem() = default;

  virtual int num_variables() const = 0;
  virtual int num_constraints() const = 0;

  virtual Eigen::VectorXd lower_bounds() const = 0;
  virtual Eigen::VectorXd upper_bounds() const = 0;
  virtual Eigen::VectorXd initial_point() const = 0;

  virtual double Objective(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd ObjectiveGradient(const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd Constraints(const Eigen::VectorXd& x) const = 0;

  // Entries of dc/dx, row = constraint, col = variable.
  virtual void ConstraintJacobian(const Eigen::VectorXd& x, std::vector<Triplet>* out) const = 0;

  // Lower triangle (row >= col) of obj_factor * Hess f + sum_i lambda_i Hess c_i.
  virtual void LagrangianHessian(const Eigen::VectorXd& x, double obj_factor,
                                 const Eigen::VectorXd& lambda,
                                 std::vector<Triplet>* out) const = 0;
};

// Convenience for tests and diagnostics.
Eigen::SparseMatrix<double> AssembleJacobian(const NlpProblem& problem,
                                             const Eigen::VectorXd& x);

}  // namespace craneplan
