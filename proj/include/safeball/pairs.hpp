#pragma once

#include <optional>

#include "safeball/problem.hpp"
#include "safeball/solver.hpp"

namespace safeball {

/// Primal-dual candidate fed to ball constructors. `linked` records whether
/// A^T u in dg(x) was verified; `gamma` is set for sequential pairs, where
/// u = -gamma^{-1} grad f(Ax).
struct PrimalDualPair {
  Eigen::VectorXd x;
  Eigen::VectorXd u;
  bool linked = false;
  std::optional<double> gamma;
};

/// Shrinks -grad f(Ax) by the largest factor in (0, 1] keeping it
/// dual-feasible, producing a valid dual point from any primal iterate.
PrimalDualPair dual_scaling(const Problem& p, const Eigen::VectorXd& x);

/// Solves min f(Ax) + gamma*g(x) with gamma = lambda0/lambda to duality gap
/// <= tol and returns (x_gamma, -gamma^{-1} grad f(A x_gamma)).
/// Throws SolverFailed when the tolerance is out of reach.
PrimalDualPair sequential_pair(const Problem& p, double lambda0, double tol);

/// Tests the linkage condition A^T u in dg(x).
bool verify_linkage(const Problem& p, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& u);

}  // namespace safeball
