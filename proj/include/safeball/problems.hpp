#pragma once

#include "safeball/problem.hpp"

namespace safeball {

// Tolerances shared across the problem families. Dual feasibility for norm
// constraints is tested with a 1e-9 relative slack; the logistic box with a
// 1e-12 absolute slack. Solver-produced duals sit numerically on the
// boundary of dom(-D).
inline constexpr double kDualFeasRelTol = 1e-9;
inline constexpr double kBoxTol = 1e-12;
inline constexpr double kLinkageTol = 1e-8;

struct LassoSpec {
  DesignMatrix A;
  Eigen::VectorXd y;
  double lambda = 0.0;
  /// Empty handle means the standard l1 norm; otherwise a generic norm.
  std::optional<NormHandle> norm_kind;
};

struct LogisticL1Spec {
  DesignMatrix A;  // labels pre-multiplied into the rows
  double lambda = 0.0;
};

struct ElasticNetSpec {
  DesignMatrix A;
  Eigen::VectorXd y;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Least squares with l1 (or generic norm) regularizer, alpha = 1.
Problem make_lasso(const LassoSpec& spec);

/// l1-regularized logistic regression, alpha = 4.
Problem make_logistic(const LogisticL1Spec& spec);

/// Least squares with lambda1*l1 + (lambda2/2)*l2^2 regularizer.
Problem make_elastic_net(const ElasticNetSpec& spec);

/// True iff f*(-u) and g*(A^T u) are both finite under module tolerances.
bool dual_feasible(const Problem& p, const Eigen::VectorXd& u);

/// Smallest regularization level for which 0 solves (P):
/// the dual norm of A^T grad f(0).
double lambda_max(const Problem& p);

/// The l2 norm as a NormHandle, for the generic-norm lasso.
NormHandle l2_norm_handle();

/// Same problem family with a replacement design matrix (used by screening
/// reduction). Regularizer dimensions follow the new matrix.
Problem with_matrix(const Problem& p, DesignMatrix A);

/// Same problem family at a different regularization level; for the elastic
/// net both levels are scaled by the same factor.
Problem with_lambda(const Problem& p, double lambda);

}  // namespace safeball
