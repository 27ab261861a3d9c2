#pragma once

#include <string>
#include <vector>

#include "safeball/problem.hpp"

namespace safeball {

struct DynamicScreening {
  bool enabled = false;
  std::string ball = "ryu";  // "ryu" or "gap"
  int period = 10;           // iterations between screening events
};

struct SolveOptions {
  int max_iters = 100000;
  double gap_tolerance = 1e-8;
  int gap_check_period = 10;
  DynamicScreening screening;
};

struct SolveResult {
  Eigen::VectorXd x_final;
  Eigen::VectorXd u_final;  // dual-scaled companion of x_final
  std::vector<double> gap_trace;
  std::vector<int> screening_trace;  // cumulative screened count per event
  int iterations = 0;
  bool converged = false;
};

/// prox of t*||.||_1: sign(v_j) * max(|v_j| - t, 0).
Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double t);

/// 1/L with L = sigma_max(A)^2 / alpha estimated by power iteration.
double estimate_step(const Problem& p);

/// FISTA with monotone restart and backtracking. When dynamic screening is
/// enabled, certified columns are removed at each screening event and the
/// returned solution is re-inflated with zeros.
SolveResult prox_grad_solve(const Problem& p, const SolveOptions& opts);

struct ReferenceSolution {
  Eigen::VectorXd x;
  Eigen::VectorXd u;
  double gap = 0.0;
};

/// High-accuracy solution: FISTA down to a moderate gap, then an exact solve
/// restricted to the identified support (normal equations for the quadratic
/// losses, damped Newton for logistic). Iterates until the requested gap is
/// certified; throws SolverFailed if it cannot be.
ReferenceSolution reference_solve(const Problem& p, double gap_target = 1e-12);

}  // namespace safeball
