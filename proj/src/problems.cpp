#include "safeball/problems.hpp"

#include <cmath>
#include <limits>

#include "safeball/errors.hpp"

namespace safeball {

namespace {

double log1pexp(double t) {
  if (t > 33.0) return t;
  if (t < -33.0) return std::exp(t);
  return std::log1p(std::exp(t));
}

// t*log(t) with the closure convention 0*log(0) = 0.
double xlogx(double t) { return t <= 0.0 ? 0.0 : t * std::log(t); }

Eigen::VectorXd soft_threshold_vec(const Eigen::VectorXd& v, double t) {
  Eigen::VectorXd out(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    double a = std::abs(v[j]) - t;
    out[j] = a > 0.0 ? (v[j] > 0.0 ? a : -a) : 0.0;
  }
  return out;
}

SmoothPart make_least_squares_part(const Eigen::VectorXd& y) {
  SmoothPart f;
  f.dim = y.size();
  f.alpha = 1.0;
  f.value = [y](const Eigen::VectorXd& z) {
    return 0.5 * (y - z).squaredNorm();
  };
  f.gradient = [y](const Eigen::VectorXd& z) {
    return Eigen::VectorXd(z - y);
  };
  // f*(v) = 0.5*||v||^2 + <v|y>, finite everywhere.
  f.conjugate = [y](const Eigen::VectorXd& v) {
    return ExtReal(0.5 * v.squaredNorm() + v.dot(y));
  };
  return f;
}

SmoothPart make_logistic_part(Eigen::Index m) {
  SmoothPart f;
  f.dim = m;
  f.alpha = 4.0;
  f.value = [](const Eigen::VectorXd& z) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) acc += log1pexp(-z[i]);
    return acc;
  };
  f.gradient = [](const Eigen::VectorXd& z) {
    Eigen::VectorXd g(z.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) {
      double e = std::exp(std::min(z[i], 700.0));
      g[i] = -1.0 / (1.0 + e);
    }
    return g;
  };
  // f*(v) with v = -u: sum u*log(u) + (1-u)*log(1-u) on the closed box
  // u in [0,1]^m, +inf outside.
  f.conjugate = [](const Eigen::VectorXd& v) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      double u = -v[i];
      if (u < -kBoxTol || u > 1.0 + kBoxTol) return ExtReal::infinity();
      u = std::min(1.0, std::max(0.0, u));
      acc += xlogx(u) + xlogx(1.0 - u);
    }
    return ExtReal(acc);
  };
  return f;
}

// g = lambda * norm, with conjugate the indicator of the dual-norm ball of
// radius lambda. Covers l1 and generic norms.
Regularizer make_norm_regularizer(Eigen::Index n, double lambda,
                                  const NormHandle& h) {
  Regularizer g;
  g.dim = n;
  g.value = [lambda, h](const Eigen::VectorXd& x) {
    return ExtReal(lambda * h.norm(x));
  };
  g.conjugate = [lambda, h](const Eigen::VectorXd& w) {
    return h.dual_norm(w) <= lambda * (1.0 + kDualFeasRelTol)
               ? ExtReal(0.0)
               : ExtReal::infinity();
  };
  g.in_subdifferential = [lambda, h](const Eigen::VectorXd& x,
                                     const Eigen::VectorXd& w) {
    if (h.dual_norm(w) > lambda * (1.0 + kDualFeasRelTol)) return false;
    double gx = lambda * h.norm(x);
    return std::abs(w.dot(x) - gx) <= kLinkageTol * (1.0 + gx);
  };
  if (h.name == "l1") {
    g.prox = [lambda](const Eigen::VectorXd& v, double step) {
      return soft_threshold_vec(v, lambda * step);
    };
    g.l1_level = lambda;
  } else if (h.name == "l2") {
    g.prox = [lambda](const Eigen::VectorXd& v, double step) {
      double nv = v.norm();
      double t = lambda * step;
      if (nv <= t) return Eigen::VectorXd(Eigen::VectorXd::Zero(v.size()));
      return Eigen::VectorXd((1.0 - t / nv) * v);
    };
  }
  g.feasibility_scale = [lambda, h](const Eigen::VectorXd& w) {
    double d = h.dual_norm(w);
    return d == 0.0 ? std::numeric_limits<double>::infinity() : lambda / d;
  };
  return g;
}

NormHandle l1_norm_handle() {
  NormHandle h;
  h.name = "l1";
  h.norm = [](const Eigen::VectorXd& x) { return x.lpNorm<1>(); };
  h.dual_norm = [](const Eigen::VectorXd& x) {
    return x.size() == 0 ? 0.0 : x.lpNorm<Eigen::Infinity>();
  };
  return h;
}

}  // namespace

NormHandle l2_norm_handle() {
  NormHandle h;
  h.name = "l2";
  h.norm = [](const Eigen::VectorXd& x) { return x.norm(); };
  h.dual_norm = [](const Eigen::VectorXd& x) { return x.norm(); };
  return h;
}

Problem make_lasso(const LassoSpec& spec) {
  if (spec.lambda <= 0.0)
    throw std::invalid_argument("make_lasso: lambda must be positive");
  if (spec.A.rows() == 0 || spec.A.cols() == 0)
    throw std::invalid_argument("make_lasso: empty design matrix");
  if (spec.y.size() != spec.A.rows())
    throw DimensionMismatch("make_lasso: y/A row mismatch");

  Problem p;
  p.A = spec.A;
  p.y = spec.y;
  p.lambda = spec.lambda;
  p.f = make_least_squares_part(spec.y);
  if (spec.norm_kind) {
    p.family = Family::kLeastSquaresNorm;
    p.norm = *spec.norm_kind;
  } else {
    p.family = Family::kLeastSquaresL1;
    p.norm = l1_norm_handle();
  }
  p.g = make_norm_regularizer(spec.A.cols(), spec.lambda, p.norm);
  return p;
}

Problem make_logistic(const LogisticL1Spec& spec) {
  if (spec.lambda <= 0.0)
    throw std::invalid_argument("make_logistic: lambda must be positive");
  if (spec.A.rows() == 0 || spec.A.cols() == 0)
    throw std::invalid_argument("make_logistic: empty design matrix");

  Problem p;
  p.A = spec.A;
  p.lambda = spec.lambda;
  p.family = Family::kLogisticL1;
  p.f = make_logistic_part(spec.A.rows());
  p.norm = l1_norm_handle();
  p.g = make_norm_regularizer(spec.A.cols(), spec.lambda, p.norm);
  return p;
}

Problem make_elastic_net(const ElasticNetSpec& spec) {
  if (spec.lambda1 <= 0.0 || spec.lambda2 <= 0.0)
    throw std::invalid_argument("make_elastic_net: lambdas must be positive");
  if (spec.y.size() != spec.A.rows())
    throw DimensionMismatch("make_elastic_net: y/A row mismatch");

  Problem p;
  p.A = spec.A;
  p.y = spec.y;
  p.lambda = spec.lambda1;
  p.lambda2 = spec.lambda2;
  p.family = Family::kElasticNet;
  p.f = make_least_squares_part(spec.y);

  const double l1 = spec.lambda1, l2 = spec.lambda2;
  Regularizer g;
  g.dim = spec.A.cols();
  g.value = [l1, l2](const Eigen::VectorXd& x) {
    return ExtReal(l1 * x.lpNorm<1>() + 0.5 * l2 * x.squaredNorm());
  };
  // g*(w) = sum_j max(|w_j| - lambda1, 0)^2 / (2*lambda2), finite everywhere.
  g.conjugate = [l1, l2](const Eigen::VectorXd& w) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < w.size(); ++j) {
      double a = std::abs(w[j]) - l1;
      if (a > 0.0) acc += a * a / (2.0 * l2);
    }
    return ExtReal(acc);
  };
  // w in dg(x) iff w - lambda2*x in lambda1 * d||x||_1.
  g.in_subdifferential = [l1, l2](const Eigen::VectorXd& x,
                                  const Eigen::VectorXd& w) {
    Eigen::VectorXd w1 = w - l2 * x;
    if (w1.size() > 0 &&
        w1.lpNorm<Eigen::Infinity>() > l1 * (1.0 + kDualFeasRelTol))
      return false;
    double gx = l1 * x.lpNorm<1>();
    return std::abs(w1.dot(x) - gx) <= kLinkageTol * (1.0 + gx);
  };
  g.prox = [l1, l2](const Eigen::VectorXd& v, double step) {
    return Eigen::VectorXd(soft_threshold_vec(v, l1 * step) /
                           (1.0 + l2 * step));
  };
  g.feasibility_scale = [](const Eigen::VectorXd&) {
    return std::numeric_limits<double>::infinity();
  };
  g.l1_level = l1;
  p.g = g;
  return p;
}

bool dual_feasible(const Problem& p, const Eigen::VectorXd& u) {
  if (u.size() != p.m())
    throw DimensionMismatch("dual_feasible: bad dual length");
  if (p.f.conjugate(-u).is_pos_inf()) return false;
  return !p.g.conjugate(p.A.apply_transpose(u)).is_pos_inf();
}

double lambda_max(const Problem& p) {
  Eigen::VectorXd grad0 =
      p.f.gradient(Eigen::VectorXd::Zero(p.m()));
  Eigen::VectorXd w = p.A.apply_transpose(grad0);
  if (p.family == Family::kLeastSquaresNorm) return p.norm.dual_norm(w);
  return w.size() == 0 ? 0.0 : w.lpNorm<Eigen::Infinity>();
}

Problem with_matrix(const Problem& p, DesignMatrix A) {
  switch (p.family) {
    case Family::kLeastSquaresL1:
      return make_lasso({std::move(A), p.y, p.lambda, std::nullopt});
    case Family::kLeastSquaresNorm:
      return make_lasso({std::move(A), p.y, p.lambda, p.norm});
    case Family::kLogisticL1:
      return make_logistic({std::move(A), p.lambda});
    case Family::kElasticNet:
      return make_elastic_net({std::move(A), p.y, p.lambda, p.lambda2});
  }
  throw WrongFamily("with_matrix: unknown family");
}

Problem with_lambda(const Problem& p, double lambda) {
  switch (p.family) {
    case Family::kLeastSquaresL1:
      return make_lasso({p.A, p.y, lambda, std::nullopt});
    case Family::kLeastSquaresNorm:
      return make_lasso({p.A, p.y, lambda, p.norm});
    case Family::kLogisticL1:
      return make_logistic({p.A, lambda});
    case Family::kElasticNet: {
      double scale = lambda / p.lambda;
      return make_elastic_net({p.A, p.y, lambda, p.lambda2 * scale});
    }
  }
  throw WrongFamily("with_lambda: unknown family");
}

}  // namespace safeball
