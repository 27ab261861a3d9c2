#pragma once

#include <string>

#include "safeball/pairs.hpp"
#include "safeball/problem.hpp"

namespace safeball {

/// Euclidean ball in the dual space, tagged with the name of the
/// construction that produced it.
struct Ball {
  Eigen::VectorXd center;
  double radius = 0.0;
  std::string tag;
};

// Ball constructors. All verify the pair is feasible (finite gap) and throw
// InfeasiblePair otherwise; radicands in [-1e-10, 0) are clamped to zero and
// anything more negative throws NegativeRadicand.

/// Center (u - grad f(Ax))/2, squared radius GAP/alpha - ||u+grad f(Ax)||^2/4.
/// Safe for any feasible pair.
Ball ryu_ball(const Problem& p, const Eigen::VectorXd& x,
              const Eigen::VectorXd& u);

/// Center u, radius sqrt(2 GAP / alpha).
Ball gap_ball(const Problem& p, const Eigen::VectorXd& x,
              const Eigen::VectorXd& u);

/// Center -grad f(Ax), radius sqrt(2 GAP / alpha).
Ball xgap_ball(const Problem& p, const Eigen::VectorXd& x,
               const Eigen::VectorXd& u);

/// Nonnegative rescaling of x minimizing the RYU radius for norm-regularized
/// least squares: max(0, (<Ax|y+u> - 2 lambda ||x||) / ||Ax||^2), with
/// t* = 0 when Ax = 0. Throws WrongFamily off the least-squares families.
double t_star(const Problem& p, const Eigen::VectorXd& x,
              const Eigen::VectorXd& u);

/// Center (y + u - t* Ax)/2, radius sqrt(||y-u||^2 - ||t* Ax||^2)/2.
/// Equals ryu_ball(p, t* x, u).
Ball dynamic_edpp_ball(const Problem& p, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& u);

/// Center u + (y - Ax - u)/2, radius ||y - Ax - u||/2. Requires the lasso
/// linkage <u|Ax> = lambda ||x||_1; throws LinkageViolated otherwise.
Ball fne_ball(const Problem& p, const Eigen::VectorXd& x,
              const Eigen::VectorXd& u);

/// Center (y + u)/2, radius ||y - u||/2; equals ryu_ball(p, 0, u).
Ball sasvi_ball(const Problem& p, const Eigen::VectorXd& u);

/// The FNE ball at a sequential pair.
Ball edpp_ball(const Problem& p, const PrimalDualPair& pair);

/// Center y, radius ||y - u||; superset of ryu_ball(p, 0, u).
Ball safe_ball(const Problem& p, const Eigen::VectorXd& u);

/// Center gamma*u, radius sqrt(Breg/2), for l1 logistic sequential pairs.
Ball slores_ball(const Problem& p, const PrimalDualPair& pair, double gamma);

/// Center (1+gamma)u/2, radius sqrt(Breg/4 - ||(1-gamma)u||^2/4);
/// equals ryu_ball(p, x, u) on sequential pairs.
Ball sfer_ball(const Problem& p, const PrimalDualPair& pair, double gamma);

/// Membership with a 1e-9 relative slack on the radius.
bool contains(const Ball& b, const Eigen::VectorXd& v);

/// Exact Euclidean criterion ||c_a - c_b|| + r_a <= r_b, with the same slack.
bool is_subset(const Ball& a, const Ball& b);

}  // namespace safeball
