#include "safeball/pairs.hpp"

#include <algorithm>
#include <cmath>

#include "safeball/errors.hpp"
#include "safeball/problems.hpp"
#include "safeball/solver.hpp"

namespace safeball {

PrimalDualPair dual_scaling(const Problem& p, const Eigen::VectorXd& x) {
  if (x.size() != p.n())
    throw DimensionMismatch("dual_scaling: bad primal length");
  Eigen::VectorXd v = -p.f.gradient(p.A.apply(x));
  double s = std::min(1.0, p.g.feasibility_scale(p.A.apply_transpose(v)));
  PrimalDualPair pair;
  pair.x = x;
  pair.u = s * v;
  pair.linked = verify_linkage(p, pair.x, pair.u);
  return pair;
}

PrimalDualPair sequential_pair(const Problem& p, double lambda0, double tol) {
  if (lambda0 <= 0.0)
    throw std::invalid_argument("sequential_pair: lambda0 must be positive");
  const double gamma = lambda0 / p.lambda;
  Problem sub = with_lambda(p, lambda0);
  // The linkage slack at level lambda is the subproblem gap divided by gamma,
  // so certify the tighter of the two.
  ReferenceSolution ref = reference_solve(sub, tol * std::min(1.0, gamma));

  PrimalDualPair pair;
  pair.x = ref.x;
  pair.u = -(1.0 / gamma) * p.f.gradient(p.A.apply(ref.x));
  pair.gamma = gamma;
  pair.linked = verify_linkage(p, pair.x, pair.u);
  return pair;
}

bool verify_linkage(const Problem& p, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& u) {
  if (x.size() != p.n() || u.size() != p.m())
    throw DimensionMismatch("verify_linkage: bad vector lengths");
  return p.g.in_subdifferential(x, p.A.apply_transpose(u));
}

}  // namespace safeball
