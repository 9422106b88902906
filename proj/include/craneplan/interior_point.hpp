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

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "craneplan/nlp.hpp"

namespace craneplan {

struct SolverOptions {
  double tol = 1e-6;              // scaled KKT error at which the solve stops
  int max_iter = 3000;
  double barrier_init = 0.1;      // initial barrier parameter mu
  double barrier_shrink = 0.2;    // linear factor of the mu update
  double regularization = 1e-8;  // smallest nonzero Hessian shift tried by inertia correction

  // Throws kInvalidArgument when the invariants (tol > 0, 0 < shrink < 1,
  // max_iter >= 1, barrier_init > 0, regularization > 0) are violated.
  void Validate() const;

  friend bool operator==(const SolverOptions&, const SolverOptions&) = default;
};

enum class SolveStatus { kConverged, kMaxIter, kInfeasible, kNumericalFailure };

const char* ToString(SolveStatus status);

struct SolveReport {
  SolveStatus status = SolveStatus::kNumericalFailure;
  double objective = 0.0;
  double kkt_residual = 0.0;  // scaled KKT error at the returned point
  int iterations = 0;
  double wall_time = 0.0;     // seconds
  std::string message;
  std::vector<double> barrier_history;  // mu used at each iteration
};

struct SolveResult {
  Eigen::VectorXd x;
  Eigen::VectorXd lambda;   // equality multipliers
  Eigen::VectorXd z_lower;  // bound multipliers, zero where the bound is infinite
  Eigen::VectorXd z_upper;
  SolveReport report;
};

// Snapshot passed to an optional per-iteration observer.
struct IterateInfo {
  int iteration;
  double mu;
  double objective;
  double primal_infeasibility;
  double dual_infeasibility;
  double step;
  const Eigen::VectorXd* x;
};

using IterationObserver = std::function<void(const IterateInfo&)>;

// Backend contract. Any implementation that passes the solver test-suite may
// stand in for the built-in interior-point method.
class NlpSolver {
 public:
  virtual ~NlpSolver() = default;
  virtual SolveResult Solve(const NlpProblem& problem) const = 0;
};

// Primal-dual interior-point method for bound- and equality-constrained NLPs:
// Newton steps on the perturbed KKT system (sparse LDL^T with inertia
// correction), monotone barrier decrease, fraction-to-the-boundary rule and a
// backtracking line search on an exact-penalty merit function with
// second-order corrections.
class InteriorPointSolver : public NlpSolver {
 public:
  explicit InteriorPointSolver(SolverOptions options = {}, IterationObserver observer = {});
  SolveResult Solve(const NlpProblem& problem) const override;

 private:
  SolverOptions options_;
  IterationObserver observer_;
};

SolveResult Solve(const NlpProblem& problem, const SolverOptions& options = {});

// First-order optimality residuals measured against the problem's original
// bounds, independent of how the point was produced. Sign convention:
//   grad f + J^T lambda - z_lower + z_upper = 0.
struct KktResiduals {
  double stationarity = 0.0;         // ||grad L||_inf
  double primal_feasibility = 0.0;   // max(||c||_inf, worst bound violation)
  double complementarity = 0.0;      // max |z (x - bound)| over finite bounds
  double dual_sign = 0.0;            // worst negative bound multiplier
  double max() const;
};

// Throws kDimensionMismatch if any vector disagrees with the problem size.
KktResiduals KktCheck(const NlpProblem& problem, const Eigen::VectorXd& x,
                      const Eigen::VectorXd& lambda, const Eigen::VectorXd& z_lower,
                      const Eigen::VectorXd& z_upper);

}  // namespace craneplan
