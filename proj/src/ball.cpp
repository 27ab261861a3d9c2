#include "safeball/ball.hpp"

#include <cmath>

#include "safeball/errors.hpp"
#include "safeball/problems.hpp"

namespace safeball {

namespace {

// Cancellation can push a mathematically nonnegative radicand slightly below
// zero; anything past the band signals an upstream bug.
constexpr double kRadicandBand = -1e-10;

double checked_sqrt(double radicand, const char* who) {
  if (radicand < kRadicandBand)
    throw NegativeRadicand(std::string(who) + ": radicand " +
                           std::to_string(radicand));
  return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

double finite_gap(const Problem& p, const Eigen::VectorXd& x,
                  const Eigen::VectorXd& u, const char* who) {
  ExtReal gap = duality_gap(p, x, u);
  if (!gap.finite())
    throw InfeasiblePair(std::string(who) + ": pair has infinite gap");
  return gap.value();
}

void require_least_squares_norm(const Problem& p, const char* who) {
  if (p.family != Family::kLeastSquaresL1 &&
      p.family != Family::kLeastSquaresNorm)
    throw WrongFamily(std::string(who) +
                      ": needs norm-regularized least squares");
}

void require_lasso(const Problem& p, const char* who) {
  if (p.family != Family::kLeastSquaresL1)
    throw WrongFamily(std::string(who) + ": needs the l1 lasso");
}

void require_feasible_dual(const Problem& p, const Eigen::VectorXd& u,
                           const char* who) {
  if (!dual_feasible(p, u))
    throw InfeasiblePair(std::string(who) + ": dual point infeasible");
}

}  // namespace

Ball ryu_ball(const Problem& p, const Eigen::VectorXd& x,
              const Eigen::VectorXd& u) {
  double gap = finite_gap(p, x, u, "ryu_ball");
  Eigen::VectorXd grad = p.f.gradient(p.A.apply(x));
  double radicand = gap / p.f.alpha - 0.25 * (u + grad).squaredNorm();
  return Ball{0.5 * (u - grad), checked_sqrt(radicand, "ryu_ball"), "ryu"};
}

Ball gap_ball(const Problem& p, const Eigen::VectorXd& x,
              const Eigen::VectorXd& u) {
  double gap = finite_gap(p, x, u, "gap_ball");
  return Ball{u, checked_sqrt(2.0 * gap / p.f.alpha, "gap_ball"), "gap"};
}

Ball xgap_ball(const Problem& p, const Eigen::VectorXd& x,
               const Eigen::VectorXd& u) {
  double gap = finite_gap(p, x, u, "xgap_ball");
  Eigen::VectorXd grad = p.f.gradient(p.A.apply(x));
  return Ball{-grad, checked_sqrt(2.0 * gap / p.f.alpha, "xgap_ball"), "xgap"};
}

double t_star(const Problem& p, const Eigen::VectorXd& x,
              const Eigen::VectorXd& u) {
  require_least_squares_norm(p, "t_star");
  if (x.size() != p.n() || u.size() != p.m())
    throw DimensionMismatch("t_star: bad vector lengths");
  Eigen::VectorXd ax = p.A.apply(x);
  double denom = ax.squaredNorm();
  if (denom == 0.0) return 0.0;  // 0/0 = 0 and -c/0 = -inf conventions
  double numer = ax.dot(p.y + u) - 2.0 * p.lambda * p.norm.norm(x);
  return std::max(0.0, numer / denom);
}

Ball dynamic_edpp_ball(const Problem& p, const Eigen::VectorXd& x,
                       const Eigen::VectorXd& u) {
  require_least_squares_norm(p, "dynamic_edpp_ball");
  finite_gap(p, x, u, "dynamic_edpp_ball");
  double t = t_star(p, x, u);
  Eigen::VectorXd tax = t * p.A.apply(x);
  double radicand = 0.25 * ((p.y - u).squaredNorm() - tax.squaredNorm());
  return Ball{0.5 * (p.y + u - tax),
              checked_sqrt(radicand, "dynamic_edpp_ball"), "dyn-edpp"};
}

Ball fne_ball(const Problem& p, const Eigen::VectorXd& x,
              const Eigen::VectorXd& u) {
  require_lasso(p, "fne_ball");
  if (x.size() != p.n()) throw DimensionMismatch("fne_ball: bad x length");
  require_feasible_dual(p, u, "fne_ball");
  Eigen::VectorXd ax = p.A.apply(x);
  double gx = p.lambda * x.lpNorm<1>();
  if (std::abs(u.dot(ax) - gx) > kLinkageTol * (1.0 + gx))
    throw LinkageViolated("fne_ball: <u|Ax> != lambda*||x||_1");
  Eigen::VectorXd res = p.y - ax - u;
  return Ball{u + 0.5 * res, 0.5 * res.norm(), "fne"};
}

Ball sasvi_ball(const Problem& p, const Eigen::VectorXd& u) {
  require_lasso(p, "sasvi_ball");
  require_feasible_dual(p, u, "sasvi_ball");
  return Ball{0.5 * (p.y + u), 0.5 * (p.y - u).norm(), "sasvi"};
}

Ball edpp_ball(const Problem& p, const PrimalDualPair& pair) {
  if (!pair.gamma)
    throw LinkageViolated("edpp_ball: pair is not a sequential pair");
  Ball b = fne_ball(p, pair.x, pair.u);
  b.tag = "edpp";
  return b;
}

Ball safe_ball(const Problem& p, const Eigen::VectorXd& u) {
  require_lasso(p, "safe_ball");
  require_feasible_dual(p, u, "safe_ball");
  return Ball{p.y, (p.y - u).norm(), "safe"};
}

Ball slores_ball(const Problem& p, const PrimalDualPair& pair, double gamma) {
  if (p.family != Family::kLogisticL1)
    throw WrongFamily("slores_ball: needs l1 logistic regression");
  if (!verify_linkage(p, pair.x, pair.u))
    throw LinkageViolated("slores_ball: pair fails A^T u in dg(x)");
  ExtReal breg = bregman_divergence(p, pair.x, pair.u);
  if (!breg.finite()) throw InfeasiblePair("slores_ball: infinite divergence");
  return Ball{gamma * pair.u, checked_sqrt(0.5 * breg.value(), "slores_ball"),
              "slores"};
}

Ball sfer_ball(const Problem& p, const PrimalDualPair& pair, double gamma) {
  if (p.family != Family::kLogisticL1)
    throw WrongFamily("sfer_ball: needs l1 logistic regression");
  if (!verify_linkage(p, pair.x, pair.u))
    throw LinkageViolated("sfer_ball: pair fails A^T u in dg(x)");
  ExtReal breg = bregman_divergence(p, pair.x, pair.u);
  if (!breg.finite()) throw InfeasiblePair("sfer_ball: infinite divergence");
  double radicand = 0.25 * breg.value() -
                    0.25 * ((1.0 - gamma) * pair.u).squaredNorm();
  return Ball{0.5 * (1.0 + gamma) * pair.u,
              checked_sqrt(radicand, "sfer_ball"), "sfer"};
}

bool contains(const Ball& b, const Eigen::VectorXd& v) {
  if (v.size() != b.center.size())
    throw DimensionMismatch("contains: bad vector length");
  return (v - b.center).norm() <= b.radius + 1e-9 * (1.0 + b.radius);
}

bool is_subset(const Ball& a, const Ball& b) {
  if (a.center.size() != b.center.size())
    throw DimensionMismatch("is_subset: bad ball dimensions");
  return (a.center - b.center).norm() + a.radius <=
         b.radius + 1e-9 * (1.0 + b.radius);
}

}  // namespace safeball
