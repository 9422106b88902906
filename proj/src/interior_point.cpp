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

#include "craneplan/interior_point.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/SparseCholesky>

#include "craneplan/error.hpp"

namespace craneplan {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Interior-point constants; names follow the usual primal-dual literature.
constexpr double kBoundPush = 1e-2;        // initial point distance from bounds
constexpr double kBoundFrac = 1e-2;
constexpr double kTauMin = 0.99;           // fraction-to-the-boundary floor
constexpr double kKappaEpsilon = 10.0;     // barrier subproblem tolerance factor
constexpr double kBarrierPower = 1.5;      // superlinear part of the mu update
constexpr double kKappaSigma = 1e10;       // bound multiplier safeguard
constexpr double kScaleMax = 100.0;        // KKT error scaling threshold
constexpr double kArmijo = 1e-4;
constexpr double kPenaltyRho = 0.1;
constexpr double kPenaltyDecayGap = 10.0;
constexpr double kDamping = 1e-5;          // linear damping on single-bounded variables
constexpr double kStaticDualReg = 1e-9;    // keeps the KKT matrix quasi-definite
constexpr double kFirstHessianShift = 1e-4;
constexpr double kMaxHessianShift = 1e40;
constexpr double kMaxLambdaInit = 1e3;
constexpr int kMaxBacktracks = 40;
constexpr int kMaxRefinementSteps = 5;

struct Bounds {
  Eigen::VectorXd lo, hi;
  std::vector<bool> has_lo, has_hi;
  int num_lo = 0, num_hi = 0;
};

Bounds ClassifyBounds(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper) {
  const int n = static_cast<int>(lower.size());
  Bounds b{lower, upper, std::vector<bool>(n), std::vector<bool>(n)};
  for (int i = 0; i < n; ++i) {
    b.has_lo[i] = std::isfinite(lower[i]);
    b.has_hi[i] = std::isfinite(upper[i]);
    if (b.has_lo[i]) ++b.num_lo;
    if (b.has_hi[i]) ++b.num_hi;
  }
  return b;
}

void PushInside(const Bounds& b, Eigen::VectorXd* x) {
  for (int i = 0; i < x->size(); ++i) {
    double& xi = (*x)[i];
    if (b.has_lo[i] && b.has_hi[i]) {
      const double range = b.hi[i] - b.lo[i];
      const double pl = std::min(kBoundPush * std::max(1.0, std::abs(b.lo[i])), kBoundFrac * range);
      const double pu = std::min(kBoundPush * std::max(1.0, std::abs(b.hi[i])), kBoundFrac * range);
      xi = std::clamp(xi, b.lo[i] + pl, b.hi[i] - pu);
    } else if (b.has_lo[i]) {
      xi = std::max(xi, b.lo[i] + kBoundPush * std::max(1.0, std::abs(b.lo[i])));
    } else if (b.has_hi[i]) {
      xi = std::min(xi, b.hi[i] - kBoundPush * std::max(1.0, std::abs(b.hi[i])));
    }
  }
}

// Largest step in (0, 1] keeping v + alpha * dv >= (1 - tau) v for the masked entries.
double FractionToBoundary(const Eigen::VectorXd& v, const Eigen::VectorXd& dv,
                          const std::vector<bool>& mask, double tau) {
  double alpha = 1.0;
  for (int i = 0; i < v.size(); ++i) {
    if (mask[i] && dv[i] < 0.0) alpha = std::min(alpha, -tau * v[i] / dv[i]);
  }
  return alpha;
}

// Symmetric indefinite KKT system
//
//   [ W + Sigma + dw I   J^T   ] [dx]   [r_x]
//   [ J                 -dc I  ] [dl] = [r_c]
//
// factorized as LDL^T with a fill-reducing ordering. The small static dc makes
// the matrix quasi-definite so the factorization exists for any ordering once
// the Hessian block is shifted to the right inertia; iterative refinement
// against dc = 0 removes the perturbation from the computed step.
class KktSystem {
 public:
  KktSystem(int n, int m) : n_(n), m_(m) {}

  // Returns true if the factorization exists and has inertia (n, m, 0).
  bool Factor(const std::vector<Triplet>& hessian, const std::vector<Triplet>& jacobian,
              const Eigen::VectorXd& sigma, double dw, double dc) {
    triplets_.clear();
    triplets_.reserve(hessian.size() + jacobian.size() + n_ + m_);
    for (const auto& t : hessian) {
      if (t.row() >= t.col()) triplets_.push_back(t);
    }
    for (const auto& t : jacobian) triplets_.emplace_back(n_ + t.row(), t.col(), t.value());
    for (int i = 0; i < n_; ++i) triplets_.emplace_back(i, i, sigma[i] + dw);
    for (int i = 0; i < m_; ++i) triplets_.emplace_back(n_ + i, n_ + i, -dc);
    matrix_.resize(n_ + m_, n_ + m_);
    matrix_.setFromTriplets(triplets_.begin(), triplets_.end());
    if (!analyzed_) {
      ldlt_.analyzePattern(matrix_);
      analyzed_ = true;
    }
    ldlt_.factorize(matrix_);
    dc_ = dc;
    if (ldlt_.info() != Eigen::Success) {
      singular_ = true;
      return false;
    }
    const Eigen::VectorXd d = ldlt_.vectorD();
    int pos = 0, neg = 0, zero = 0;
    for (int i = 0; i < d.size(); ++i) {
      if (!std::isfinite(d[i]) || d[i] == 0.0) {
        ++zero;
      } else if (d[i] > 0.0) {
        ++pos;
      } else {
        ++neg;
      }
    }
    singular_ = zero > 0;
    return zero == 0 && pos == n_ && neg == m_;
  }

  bool singular() const { return singular_; }

  Eigen::VectorXd Solve(const Eigen::VectorXd& rhs) const {
    Eigen::VectorXd sol = ldlt_.solve(rhs);
    if (dc_ == 0.0) return sol;
    double last = kInf;
    for (int k = 0; k < kMaxRefinementSteps; ++k) {
      const Eigen::VectorXd res = rhs - Apply(sol);
      const double norm = res.lpNorm<Eigen::Infinity>();
      if (!(norm < last) || norm <= 1e-14 * (1.0 + rhs.lpNorm<Eigen::Infinity>())) break;
      last = norm;
      sol += ldlt_.solve(res);
    }
    return sol;
  }

 private:
  // Product with the unregularized (dc = 0) matrix.
  Eigen::VectorXd Apply(const Eigen::VectorXd& v) const {
    Eigen::VectorXd out = matrix_.selfadjointView<Eigen::Lower>() * v;
    out.tail(m_) += dc_ * v.tail(m_);
    return out;
  }

  int n_, m_;
  std::vector<Triplet> triplets_;
  Eigen::SparseMatrix<double> matrix_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower,
                        Eigen::AMDOrdering<int>>
      ldlt_;
  bool analyzed_ = false;
  bool singular_ = false;
  double dc_ = 0.0;
};

Eigen::VectorXd JacobianTimes(const std::vector<Triplet>& jac, int m, const Eigen::VectorXd& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(m);
  for (const auto& t : jac) out[t.row()] += t.value() * v[t.col()];
  return out;
}

Eigen::VectorXd JacobianTransposeTimes(const std::vector<Triplet>& jac, int n,
                                       const Eigen::VectorXd& v) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (const auto& t : jac) out[t.col()] += t.value() * v[t.row()];
  return out;
}

double SymmetricQuadratic(const std::vector<Triplet>& lower, const Eigen::VectorXd& v) {
  double q = 0.0;
  for (const auto& t : lower) {
    if (t.row() == t.col()) {
      q += t.value() * v[t.row()] * v[t.row()];
    } else if (t.row() > t.col()) {
      q += 2.0 * t.value() * v[t.row()] * v[t.col()];
    }
  }
  return q;
}

// Working state of one solve.
class Iteration {
 public:
  Iteration(const NlpProblem& problem, const SolverOptions& options,
            const IterationObserver& observer)
      : problem_(problem),
        options_(options),
        observer_(observer),
        n_(problem.num_variables()),
        m_(problem.num_constraints()),
        kkt_(n_, m_) {}

  SolveResult Run();

 private:
  void Evaluate() {
    f_ = problem_.Objective(x_);
    g_ = problem_.ObjectiveGradient(x_);
    c_ = problem_.Constraints(x_);
    jac_.clear();
    problem_.ConstraintJacobian(x_, &jac_);
  }

  Eigen::VectorXd SlackLo(const Eigen::VectorXd& x) const { return Slack(x, true); }
  Eigen::VectorXd SlackHi(const Eigen::VectorXd& x) const { return Slack(x, false); }
  Eigen::VectorXd Slack(const Eigen::VectorXd& x, bool lower) const {
    Eigen::VectorXd s = Eigen::VectorXd::Ones(n_);
    for (int i = 0; i < n_; ++i) {
      if (lower && b_.has_lo[i]) s[i] = x[i] - b_.lo[i];
      if (!lower && b_.has_hi[i]) s[i] = b_.hi[i] - x[i];
    }
    return s;
  }

  double BarrierObjective(double f, const Eigen::VectorXd& x) const {
    double phi = f;
    for (int i = 0; i < n_; ++i) {
      if (b_.has_lo[i]) {
        const double s = x[i] - b_.lo[i];
        phi -= mu_ * std::log(s);
        if (!b_.has_hi[i]) phi += kDamping * mu_ * s;
      }
      if (b_.has_hi[i]) {
        const double s = b_.hi[i] - x[i];
        phi -= mu_ * std::log(s);
        if (!b_.has_lo[i]) phi += kDamping * mu_ * s;
      }
    }
    return phi;
  }

  Eigen::VectorXd BarrierGradient() const {
    Eigen::VectorXd gp = g_;
    for (int i = 0; i < n_; ++i) {
      if (b_.has_lo[i]) {
        gp[i] -= mu_ / (x_[i] - b_.lo[i]);
        if (!b_.has_hi[i]) gp[i] += kDamping * mu_;
      }
      if (b_.has_hi[i]) {
        gp[i] += mu_ / (b_.hi[i] - x_[i]);
        if (!b_.has_lo[i]) gp[i] -= kDamping * mu_;
      }
    }
    return gp;
  }

  // Scaled KKT error of the barrier problem with parameter `mu` (0 for the
  // original problem).
  double KktError(double mu) const {
    const Eigen::VectorXd grad_l =
        g_ + JacobianTransposeTimes(jac_, n_, lambda_) - zl_ + zu_;
    const Eigen::VectorXd sl = SlackLo(x_), su = SlackHi(x_);
    double compl_err = 0.0, z_sum = 0.0;
    for (int i = 0; i < n_; ++i) {
      if (b_.has_lo[i]) compl_err = std::max(compl_err, std::abs(zl_[i] * sl[i] - mu));
      if (b_.has_hi[i]) compl_err = std::max(compl_err, std::abs(zu_[i] * su[i] - mu));
      z_sum += std::abs(zl_[i]) + std::abs(zu_[i]);
    }
    const int nb = b_.num_lo + b_.num_hi;
    const double sd = std::max(kScaleMax, (lambda_.lpNorm<1>() + z_sum) /
                                              std::max(1, m_ + nb)) / kScaleMax;
    const double sc = std::max(kScaleMax, z_sum / std::max(1, nb)) / kScaleMax;
    const double primal = m_ > 0 ? c_.lpNorm<Eigen::Infinity>() : 0.0;
    return std::max({grad_l.lpNorm<Eigen::Infinity>() / sd, primal, compl_err / sc});
  }

  // Factorize with inertia correction. Returns false on numerical failure.
  bool FactorWithInertiaCorrection(const std::vector<Triplet>& hess,
                                   const Eigen::VectorXd& sigma) {
    double dc = kStaticDualReg;
    if (kkt_.Factor(hess, jac_, sigma, 0.0, dc)) return true;
    if (kkt_.singular()) dc = std::max(dc, 1e-8 * std::pow(mu_, 0.25));
    double dw = last_shift_ == 0.0
                    ? kFirstHessianShift
                    : std::max(options_.regularization, last_shift_ / 3.0);
    while (dw <= kMaxHessianShift) {
      if (kkt_.Factor(hess, jac_, sigma, dw, dc)) {
        last_shift_ = dw;
        return true;
      }
      dw *= last_shift_ == 0.0 ? 100.0 : 8.0;
    }
    return false;
  }

  void InitializeMultipliers();
  void SafeguardBoundMultipliers();

  const NlpProblem& problem_;
  const SolverOptions& options_;
  const IterationObserver& observer_;
  const int n_, m_;
  Bounds b_;
  KktSystem kkt_;

  Eigen::VectorXd x_, lambda_, zl_, zu_;
  double f_ = 0.0;
  Eigen::VectorXd g_, c_;
  std::vector<Triplet> jac_;
  double mu_ = 0.1;
  double penalty_ = 0.0;
  double last_shift_ = 0.0;
};

void Iteration::InitializeMultipliers() {
  lambda_ = Eigen::VectorXd::Zero(m_);
  if (m_ == 0) return;
  std::vector<Triplet> hess;
  problem_.LagrangianHessian(x_, 0.0, lambda_, &hess);
  for (auto& t : hess) t = Triplet(t.row(), t.col(), 0.0);
  if (!kkt_.Factor(hess, jac_, Eigen::VectorXd::Zero(n_), 1.0, kStaticDualReg)) return;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_ + m_);
  rhs.head(n_) = -(g_ - zl_ + zu_);
  const Eigen::VectorXd sol = kkt_.Solve(rhs);
  const Eigen::VectorXd lambda = sol.tail(m_);
  if (lambda.allFinite() && lambda.lpNorm<Eigen::Infinity>() <= kMaxLambdaInit) lambda_ = lambda;
}

void Iteration::SafeguardBoundMultipliers() {
  const Eigen::VectorXd sl = SlackLo(x_), su = SlackHi(x_);
  for (int i = 0; i < n_; ++i) {
    if (b_.has_lo[i]) {
      zl_[i] = std::clamp(zl_[i], mu_ / (kKappaSigma * sl[i]), kKappaSigma * mu_ / sl[i]);
    }
    if (b_.has_hi[i]) {
      zu_[i] = std::clamp(zu_[i], mu_ / (kKappaSigma * su[i]), kKappaSigma * mu_ / su[i]);
    }
  }
}

SolveResult Iteration::Run() {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  SolveReport& report = result.report;
  auto finish = [&](SolveStatus status, std::string message) {
    report.status = status;
    report.message = std::move(message);
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  const Eigen::VectorXd lower = problem_.lower_bounds();
  const Eigen::VectorXd upper = problem_.upper_bounds();
  if (lower.size() != n_ || upper.size() != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "bound vectors disagree with num_variables");
  }
  for (int i = 0; i < n_; ++i) {
    if (lower[i] > upper[i]) {
      std::ostringstream msg;
      msg << "empty bound box at variable " << i << " [" << lower[i] << ", " << upper[i] << "]";
      result.x = problem_.initial_point();
      return finish(SolveStatus::kInfeasible, msg.str());
    }
  }
  b_ = ClassifyBounds(lower, upper);

  x_ = problem_.initial_point();
  if (x_.size() != n_) {
    throw Error(ErrorCode::kDimensionMismatch, "initial point disagrees with num_variables");
  }
  PushInside(b_, &x_);
  zl_ = Eigen::VectorXd::Zero(n_);
  zu_ = Eigen::VectorXd::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (b_.has_lo[i]) zl_[i] = 1.0;
    if (b_.has_hi[i]) zu_[i] = 1.0;
  }
  mu_ = options_.barrier_init;
  const double mu_min = options_.tol / 10.0;
  const std::vector<bool> lo_mask = b_.has_lo, hi_mask = b_.has_hi;

  Evaluate();
  if (!std::isfinite(f_) || !c_.allFinite()) {
    return finish(SolveStatus::kNumericalFailure, "non-finite values at the initial point");
  }
  InitializeMultipliers();

  auto pack_result = [&]() {
    result.x = x_;
    result.lambda = lambda_;
    result.z_lower = zl_;
    result.z_upper = zu_;
    report.objective = f_;
  };

  std::vector<Triplet> hess;
  int consecutive_failures = 0;
  for (int iter = 0;; ++iter) {
    report.iterations = iter;
    const double err0 = KktError(0.0);
    report.kkt_residual = err0;
    if (err0 <= options_.tol) {
      // Iterates stay strictly inside; the clamp only guards against round-off.
      for (int i = 0; i < n_; ++i) x_[i] = std::clamp(x_[i], lower[i], upper[i]);
      Evaluate();
      pack_result();
      const KktResiduals audit = KktCheck(problem_, x_, lambda_, zl_, zu_);
      report.kkt_residual = std::max(KktError(0.0), audit.primal_feasibility);
      if (report.kkt_residual > options_.tol) {
        return finish(SolveStatus::kNumericalFailure,
                      "optimality lost when projecting onto the bounds");
      }
      return finish(SolveStatus::kConverged, "converged");
    }
    if (iter >= options_.max_iter) {
      pack_result();
      return finish(SolveStatus::kMaxIter, "iteration limit reached");
    }

    while (mu_ > mu_min && KktError(mu_) <= kKappaEpsilon * mu_) {
      mu_ = std::max(mu_min, std::min(options_.barrier_shrink * mu_, std::pow(mu_, kBarrierPower)));
    }
    report.barrier_history.push_back(mu_);
    const double tau = std::max(kTauMin, 1.0 - mu_);

    const Eigen::VectorXd sl = SlackLo(x_), su = SlackHi(x_);
    Eigen::VectorXd sigma = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < n_; ++i) {
      if (b_.has_lo[i]) sigma[i] += zl_[i] / sl[i];
      if (b_.has_hi[i]) sigma[i] += zu_[i] / su[i];
    }
    hess.clear();
    problem_.LagrangianHessian(x_, 1.0, lambda_, &hess);
    if (!FactorWithInertiaCorrection(hess, sigma)) {
      pack_result();
      return finish(SolveStatus::kNumericalFailure,
                    "KKT matrix singular after maximal regularization");
    }

    const Eigen::VectorXd grad_phi = BarrierGradient();
    Eigen::VectorXd rhs(n_ + m_);
    rhs.head(n_) = -(grad_phi + JacobianTransposeTimes(jac_, n_, lambda_));
    rhs.tail(m_) = -c_;
    const Eigen::VectorXd sol = kkt_.Solve(rhs);
    if (!sol.allFinite()) {
      pack_result();
      return finish(SolveStatus::kNumericalFailure, "non-finite Newton step");
    }
    const Eigen::VectorXd dx = sol.head(n_);
    const Eigen::VectorXd dlambda = sol.tail(m_);
    Eigen::VectorXd dzl = Eigen::VectorXd::Zero(n_), dzu = Eigen::VectorXd::Zero(n_);
    for (int i = 0; i < n_; ++i) {
      if (b_.has_lo[i]) dzl[i] = mu_ / sl[i] - zl_[i] - zl_[i] / sl[i] * dx[i];
      if (b_.has_hi[i]) dzu[i] = mu_ / su[i] - zu_[i] + zu_[i] / su[i] * dx[i];
    }
    const double alpha_max =
        std::min(FractionToBoundary(sl, dx, lo_mask, tau), FractionToBoundary(su, -dx, hi_mask, tau));
    const double alpha_z =
        std::min(FractionToBoundary(zl_, dzl, lo_mask, tau), FractionToBoundary(zu_, dzu, hi_mask, tau));

    // Exact-penalty merit: phi_mu(x) + nu ||c(x)||_1.
    // The regularized system need not satisfy J dx = -c exactly (dependent
    // constraints), so the slope uses the decrease of the linearized norm.
    const double theta = m_ > 0 ? c_.lpNorm<1>() : 0.0;
    const double theta_drop =
        m_ > 0 ? theta - (c_ + JacobianTimes(jac_, m_, dx)).lpNorm<1>() : 0.0;
    const double dphi = grad_phi.dot(dx);
    if (theta_drop > 0.0) {
      double quad = SymmetricQuadratic(hess, dx);
      for (int i = 0; i < n_; ++i) quad += sigma[i] * dx[i] * dx[i];
      const double nu_trial =
          (dphi + (quad > 0.0 ? 0.5 * quad : 0.0)) / ((1.0 - kPenaltyRho) * theta_drop);
      // Raise nu when needed; let it decay once it is far above what the
      // current step requires, or one bad early iterate pins it high forever.
      if (penalty_ < nu_trial) {
        penalty_ = nu_trial + 1.0;
      } else if (penalty_ > kPenaltyDecayGap * (nu_trial + 1.0)) {
        penalty_ = std::max(nu_trial + 1.0, 0.5 * penalty_);
      }
    }
    const double merit0 = BarrierObjective(f_, x_) + penalty_ * theta;
    const double slope = dphi - penalty_ * theta_drop;

    auto merit_at = [&](const Eigen::VectorXd& xt, double* ft, Eigen::VectorXd* ct) {
      *ft = problem_.Objective(xt);
      *ct = problem_.Constraints(xt);
      if (!std::isfinite(*ft) || !ct->allFinite()) return kInf;
      return BarrierObjective(*ft, xt) + penalty_ * (m_ > 0 ? ct->lpNorm<1>() : 0.0);
    };

    const double tiny = (dx.array().abs() / (1.0 + x_.array().abs())).maxCoeff();
    double alpha = alpha_max;
    bool accepted = false;
    Eigen::VectorXd x_new, dlambda_used = dlambda;
    double alpha_used = alpha;
    if (tiny < 10.0 * std::numeric_limits<double>::epsilon()) {
      x_new = x_ + alpha * dx;
      accepted = true;
    }
    for (int ls = 0; !accepted && ls < kMaxBacktracks; ++ls) {
      Eigen::VectorXd xt = x_ + alpha * dx;
      double ft;
      Eigen::VectorXd ct;
      const double merit = merit_at(xt, &ft, &ct);
      if (merit <= merit0 + kArmijo * alpha * slope) {
        x_new = std::move(xt);
        alpha_used = alpha;
        accepted = true;
        break;
      }
      if (ls == 0 && m_ > 0 && std::isfinite(merit) && ct.lpNorm<1>() >= theta) {
        // Second-order correction.
        Eigen::VectorXd rhs_soc = rhs;
        rhs_soc.tail(m_) = -(alpha * c_ + ct);
        const Eigen::VectorXd sol_soc = kkt_.Solve(rhs_soc);
        const Eigen::VectorXd dx_soc = sol_soc.head(n_);
        const double alpha_soc = std::min(FractionToBoundary(sl, dx_soc, lo_mask, tau),
                                          FractionToBoundary(su, -dx_soc, hi_mask, tau));
        Eigen::VectorXd xs = x_ + alpha_soc * dx_soc;
        double fs;
        Eigen::VectorXd cs;
        if (sol_soc.allFinite() &&
            merit_at(xs, &fs, &cs) <= merit0 + kArmijo * alpha * slope) {
          x_new = std::move(xs);
          dlambda_used = sol_soc.tail(m_);
          alpha_used = alpha_soc;
          accepted = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!accepted) {
      // No restoration phase: take a short step along dx and let the next
      // Newton system (typically with more regularization) try again.
      if (++consecutive_failures > 25) {
        pack_result();
        const bool infeasible = m_ > 0 && c_.lpNorm<Eigen::Infinity>() > options_.tol;
        return finish(infeasible ? SolveStatus::kInfeasible : SolveStatus::kNumericalFailure,
                      "line search failed repeatedly");
      }
      alpha_used = alpha_max * std::pow(0.5, 4);
      x_new = x_ + alpha_used * dx;
    } else {
      consecutive_failures = 0;
    }

    x_ = std::move(x_new);
    lambda_ += alpha_used * dlambda_used;
    zl_ += alpha_z * dzl;
    zu_ += alpha_z * dzu;
    SafeguardBoundMultipliers();
    Evaluate();
    if (!std::isfinite(f_) || !c_.allFinite()) {
      pack_result();
      return finish(SolveStatus::kNumericalFailure, "non-finite function values");
    }
    if (observer_) {
      observer_({iter, mu_, f_, m_ > 0 ? c_.lpNorm<Eigen::Infinity>() : 0.0,
                 (g_ + JacobianTransposeTimes(jac_, n_, lambda_) - zl_ + zu_)
                     .lpNorm<Eigen::Infinity>(),
                 alpha_used, &x_});
    }
  }
}

}  // namespace

void SolverOptions::Validate() const {
  if (!(tol > 0.0) || !(barrier_shrink > 0.0 && barrier_shrink < 1.0) || max_iter < 1 ||
      !(barrier_init > 0.0) || !(regularization > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid solver options");
  }
}

const char* ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged: return "converged";
    case SolveStatus::kMaxIter: return "max-iter";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kNumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

InteriorPointSolver::InteriorPointSolver(SolverOptions options, IterationObserver observer)
    : options_(options), observer_(std::move(observer)) {
  options_.Validate();
}

SolveResult InteriorPointSolver::Solve(const NlpProblem& problem) const {
  Iteration it(problem, options_, observer_);
  return it.Run();
}

SolveResult Solve(const NlpProblem& problem, const SolverOptions& options) {
  return InteriorPointSolver(options).Solve(problem);
}

}  // namespace craneplan
