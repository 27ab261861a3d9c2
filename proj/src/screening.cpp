#include "safeball/screening.hpp"

#include <cmath>

#include "safeball/errors.hpp"
#include "safeball/problems.hpp"

namespace safeball {

namespace {

// Strict test with a relative guard: ties are never screened, so roundoff
// cannot break soundness.
inline bool column_certified(const Problem& p, const Ball& b, double lambda,
                             Eigen::Index j) {
  double score = std::abs(p.A.column_dot(j, b.center)) +
                 b.radius * p.A.column_norm(j);
  return score < lambda * (1.0 - 1e-9);
}

double screening_level(const Problem& p, const Ball& b) {
  if (!p.g.l1_level)
    throw WrongFamily("screen_l1: regularizer has no separable l1 term");
  if (b.center.size() != p.m())
    throw DimensionMismatch("screen_l1: ball lives in the wrong space");
  return *p.g.l1_level;
}

}  // namespace

ScreenMask screen_l1(const Problem& p, const Ball& b) {
  const double lambda = screening_level(p, b);
  const Eigen::Index n = p.n();
  ScreenMask mask;
  mask.ball_tag = b.tag;
  mask.flags.assign(static_cast<size_t>(n), 0);
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < n; ++j)
    mask.flags[j] = column_certified(p, b, lambda, j) ? 1 : 0;
  return mask;
}

ScreenMask screen_l1_serial(const Problem& p, const Ball& b) {
  const double lambda = screening_level(p, b);
  const Eigen::Index n = p.n();
  ScreenMask mask;
  mask.ball_tag = b.tag;
  mask.flags.assign(static_cast<size_t>(n), 0);
  for (Eigen::Index j = 0; j < n; ++j)
    mask.flags[j] = column_certified(p, b, lambda, j) ? 1 : 0;
  return mask;
}

Eigen::VectorXd ReducedProblem::inflate(const Eigen::VectorXd& x_reduced,
                                        Eigen::Index n_full) const {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(n_full);
  for (size_t k = 0; k < kept.size(); ++k) full[kept[k]] = x_reduced[k];
  return full;
}

ReducedProblem reduce_problem(const Problem& p, const ScreenMask& mask) {
  if (mask.size() != p.n())
    throw DimensionMismatch("reduce_problem: mask length mismatch");
  ReducedProblem out;
  for (Eigen::Index j = 0; j < p.n(); ++j)
    if (!mask.flags[j]) out.kept.push_back(j);
  if (out.kept.empty()) {
    // Trivial problem: keep a single zero column so downstream code has a
    // well-formed matrix; its solution re-inflates to the zero vector.
    out.problem = with_matrix(
        p, DesignMatrix(Eigen::MatrixXd::Zero(p.m(), 1)));
    out.kept.push_back(0);
    return out;
  }
  out.problem = with_matrix(p, p.A.select_columns(out.kept));
  return out;
}

}  // namespace safeball
