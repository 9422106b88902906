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

#include <algorithm>
#include <cmath>

#include "craneplan/error.hpp"
#include "craneplan/interior_point.hpp"

namespace craneplan {

double KktResiduals::max() const {
  return std::max({stationarity, primal_feasibility, complementarity, dual_sign});
}

Eigen::SparseMatrix<double> AssembleJacobian(const NlpProblem& problem,
                                             const Eigen::VectorXd& x) {
  std::vector<Triplet> triplets;
  problem.ConstraintJacobian(x, &triplets);
  Eigen::SparseMatrix<double> jac(problem.num_constraints(), problem.num_variables());
  jac.setFromTriplets(triplets.begin(), triplets.end());
  return jac;
}

KktResiduals KktCheck(const NlpProblem& problem, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& lambda, const Eigen::VectorXd& z_lower,
                      const Eigen::VectorXd& z_upper) {
  const int n = problem.num_variables();
  const int m = problem.num_constraints();
  if (x.size() != n || lambda.size() != m || z_lower.size() != n || z_upper.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "KKT check: vector sizes disagree with problem");
  }
  const Eigen::VectorXd lower = problem.lower_bounds();
  const Eigen::VectorXd upper = problem.upper_bounds();

  const Eigen::SparseMatrix<double> jac = AssembleJacobian(problem, x);
  Eigen::VectorXd grad_l = problem.ObjectiveGradient(x) - z_lower + z_upper;
  if (m > 0) grad_l += jac.transpose() * lambda;

  KktResiduals r;
  r.stationarity = grad_l.lpNorm<Eigen::Infinity>();
  r.primal_feasibility = m > 0 ? problem.Constraints(x).lpNorm<Eigen::Infinity>() : 0.0;
  for (int i = 0; i < n; ++i) {
    if (std::isfinite(lower[i])) {
      r.primal_feasibility = std::max(r.primal_feasibility, lower[i] - x[i]);
      r.complementarity = std::max(r.complementarity, std::abs(z_lower[i] * (x[i] - lower[i])));
    } else {
      r.stationarity = std::max(r.stationarity, std::abs(z_lower[i]));
    }
    if (std::isfinite(upper[i])) {
      r.primal_feasibility = std::max(r.primal_feasibility, x[i] - upper[i]);
      r.complementarity = std::max(r.complementarity, std::abs(z_upper[i] * (upper[i] - x[i])));
    } else {
      r.stationarity = std::max(r.stationarity, std::abs(z_upper[i]));
    }
    r.dual_sign = std::max({r.dual_sign, -z_lower[i], -z_upper[i]});
  }
  return r;
}

}  // namespace craneplan
