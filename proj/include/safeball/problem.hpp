#pragma once

#include <functional>
#include <optional>
#include <string>

#include "safeball/extreal.hpp"
#include "safeball/matrix.hpp"

namespace safeball {

/// Smooth loss term f: evaluator, gradient and convex conjugate, together
/// with the strong-convexity modulus alpha of f* (f has a (1/alpha)-Lipschitz
/// gradient).
struct SmoothPart {
  Eigen::Index dim = 0;
  double alpha = 1.0;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  std::function<ExtReal(const Eigen::VectorXd&)> conjugate;  // f*(v)
};

/// Regularizer g with its conjugate, subdifferential membership test,
/// proximity operator and the scaling used to pull dual candidates into the
/// domain of g*.
struct Regularizer {
  Eigen::Index dim = 0;
  std::function<ExtReal(const Eigen::VectorXd&)> value;
  std::function<ExtReal(const Eigen::VectorXd&)> conjugate;  // g*(w)
  /// Tests w in dg(x).
  std::function<bool(const Eigen::VectorXd&, const Eigen::VectorXd&)>
      in_subdifferential;
  /// prox_{step*g}(v).
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> prox;
  /// Largest s > 0 such that g*(s*w) is finite (+inf when unconstrained).
  std::function<double(const Eigen::VectorXd&)> feasibility_scale;
  /// Threshold of the l1 component, when g has one (lambda, or lambda1 for
  /// the elastic net). Screening applies only when set.
  std::optional<double> l1_level;
};

enum class Family {
  kLeastSquaresL1,
  kLeastSquaresNorm,  // generic norm regularizer
  kLogisticL1,
  kElasticNet,
};

/// A norm given by its evaluator, dual norm and prox of step*lambda*norm.
struct NormHandle {
  std::string name;
  std::function<double(const Eigen::VectorXd&)> norm;
  std::function<double(const Eigen::VectorXd&)> dual_norm;
};

/// Composite problem min_x f(Ax) + g(x).
struct Problem {
  DesignMatrix A;
  SmoothPart f;
  Regularizer g;

  Family family = Family::kLeastSquaresL1;
  Eigen::VectorXd y;     // least-squares data; empty for logistic
  double lambda = 0.0;   // regularization level (lambda1 for elastic net)
  double lambda2 = 0.0;  // elastic net ridge level
  NormHandle norm;       // set for kLeastSquaresNorm

  Eigen::Index m() const { return A.rows(); }
  Eigen::Index n() const { return A.cols(); }
};

// Core evaluations. All check dimensions and use extended-real arithmetic:
// primal_objective is +inf outside dom(P), dual_objective is -inf outside
// dom(-D), duality_gap is +inf when either happens.

ExtReal primal_objective(const Problem& p, const Eigen::VectorXd& x);
ExtReal dual_objective(const Problem& p, const Eigen::VectorXd& u);
ExtReal duality_gap(const Problem& p, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& u);

/// Fen(x, u) = f(Ax) + f*(-u) + <u | Ax>.
ExtReal fenchel_divergence(const Problem& p, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& u);

/// Breg(x, u) = f*(-u) - f*(grad f(Ax)) + <Ax | u + grad f(Ax)>.
ExtReal bregman_divergence(const Problem& p, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& u);

}  // namespace safeball
