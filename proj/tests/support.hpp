#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles here
// never call the code path they are used to check.

#include <Eigen/Dense>
#include <functional>
#include <random>

#include "safeball/io.hpp"
#include "safeball/problems.hpp"

namespace testsupport {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Closed-form oracle for lasso with orthonormal columns (A^T A = I):
// x* = soft-threshold(A^T y, lambda), u* = y - A x*.
// Implemented from scratch, independent of the library's soft_threshold.

struct OrthonormalLassoSolution {
  VectorXd x;
  VectorXd u;
};

inline OrthonormalLassoSolution orthonormal_lasso_solution(const MatrixXd& A,
                                                           const VectorXd& y,
                                                           double lambda) {
  VectorXd c = A.transpose() * y;
  VectorXd x(c.size());
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    double mag = std::abs(c[j]) - lambda;
    x[j] = mag > 0.0 ? (c[j] > 0.0 ? mag : -mag) : 0.0;
  }
  return {x, y - A * x};
}

// Random matrix with orthonormal columns (m >= n) via QR.
inline MatrixXd orthonormal_columns(Eigen::Index m, Eigen::Index n,
                                    std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixXd g(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<MatrixXd> qr(g);
  return MatrixXd(qr.householderQ()).leftCols(n);
}

// ---------------------------------------------------------------------------
// Brute-force 1-D conjugate: sup over a grid of w*x - g(x).

inline double conjugate_1d_grid(const std::function<double(double)>& g,
                                double w, double lo = -20.0, double hi = 20.0,
                                int points = 400001) {
  double best = -std::numeric_limits<double>::infinity();
  double step = (hi - lo) / (points - 1);
  for (int k = 0; k < points; ++k) {
    double x = lo + k * step;
    best = std::max(best, w * x - g(x));
  }
  return best;
}

// Brute-force 1-D prox: argmin over a grid of 0.5*(x-v)^2 + g(x).
inline double prox_1d_grid(const std::function<double(double)>& g, double v,
                           double lo = -20.0, double hi = 20.0,
                           int points = 400001) {
  double best = std::numeric_limits<double>::infinity();
  double arg = 0.0;
  double step = (hi - lo) / (points - 1);
  for (int k = 0; k < points; ++k) {
    double x = lo + k * step;
    double val = 0.5 * (x - v) * (x - v) + g(x);
    if (val < best) {
      best = val;
      arg = x;
    }
  }
  return arg;
}

// Central finite differences of a scalar field.
inline VectorXd finite_difference_gradient(
    const std::function<double(const VectorXd&)>& f, const VectorXd& z,
    double h = 1e-6) {
  VectorXd g(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    VectorXd zp = z, zm = z;
    zp[i] += h;
    zm[i] -= h;
    g[i] = (f(zp) - f(zm)) / (2.0 * h);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Random instance builders.

inline safeball::Problem random_lasso(std::mt19937_64& rng, Eigen::Index m,
                                      Eigen::Index n, double lambda_frac) {
  safeball::SyntheticSpec spec{m, n, 0.3, 0.2, rng(), true};
  safeball::InstanceData data = safeball::generate_synthetic(spec);
  safeball::Problem probe =
      safeball::make_lasso({data.A, data.y, 1.0, std::nullopt});
  double lmax = safeball::lambda_max(probe);
  return safeball::make_lasso(
      {data.A, data.y, lambda_frac * lmax, std::nullopt});
}

inline safeball::Problem random_logistic(std::mt19937_64& rng, Eigen::Index m,
                                         Eigen::Index n, double lambda_frac) {
  safeball::SyntheticSpec spec{m, n, 0.3, 0.2, rng(), true};
  safeball::InstanceData data =
      safeball::generate_synthetic_classification(spec);
  safeball::DesignMatrix folded = safeball::fold_labels(data.A, data.y);
  safeball::Problem probe = safeball::make_logistic({folded, 1.0});
  double lmax = safeball::lambda_max(probe);
  return safeball::make_logistic({folded, lambda_frac * lmax});
}

inline safeball::Problem random_elastic_net(std::mt19937_64& rng,
                                            Eigen::Index m, Eigen::Index n,
                                            double lambda_frac,
                                            double l2_ratio = 0.5) {
  safeball::SyntheticSpec spec{m, n, 0.3, 0.2, rng(), true};
  safeball::InstanceData data = safeball::generate_synthetic(spec);
  safeball::Problem probe =
      safeball::make_elastic_net({data.A, data.y, 1.0, 0.5});
  double lmax = safeball::lambda_max(probe);
  double l1 = lambda_frac * lmax;
  return safeball::make_elastic_net({data.A, data.y, l1, l2_ratio * l1});
}

inline VectorXd random_vector(std::mt19937_64& rng, Eigen::Index d,
                              double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  VectorXd v(d);
  for (Eigen::Index i = 0; i < d; ++i) v[i] = gauss(rng);
  return v;
}

// A = I_2, y = (2, 1), lambda = 1: the worked example used across suites.
inline safeball::Problem identity_lasso(double y0 = 2.0, double y1 = 1.0,
                                        double lambda = 1.0) {
  VectorXd y(2);
  y << y0, y1;
  return safeball::make_lasso(
      {safeball::DesignMatrix(MatrixXd::Identity(2, 2)), y, lambda,
       std::nullopt});
}

}  // namespace testsupport
