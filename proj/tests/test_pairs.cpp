#include <doctest.h>

#include <random>

#include "safeball/errors.hpp"
#include "safeball/pairs.hpp"
#include "safeball/problems.hpp"
#include "support.hpp"

using namespace safeball;
using testsupport::identity_lasso;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("dual scaling pulls the residual into the feasible set") {
  Problem p = identity_lasso();  // y = (2, 1), lambda = 1
  PrimalDualPair pair = dual_scaling(p, VectorXd::Zero(2));
  // -grad f(0) = y, scale = lambda / ||A^T y||_inf = 0.5
  CHECK(pair.u[0] == doctest::Approx(1.0));
  CHECK(pair.u[1] == doctest::Approx(0.5));
  CHECK(pair.linked);  // trivially linked at x = 0
  CHECK_FALSE(pair.gamma.has_value());
  CHECK(dual_feasible(p, pair.u));
}

TEST_CASE("dual scaling maps the primal optimum to the dual optimum") {
  Problem p = identity_lasso();
  VectorXd xs(2);
  xs << 1.0, 0.0;
  PrimalDualPair pair = dual_scaling(p, xs);
  CHECK(pair.u[0] == doctest::Approx(1.0));
  CHECK(pair.u[1] == doctest::Approx(1.0));
  CHECK(pair.linked);
  CHECK(duality_gap(p, pair.x, pair.u).value() ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dual scaling never inflates an already feasible residual") {
  Problem p = with_lambda(identity_lasso(), 10.0);
  PrimalDualPair pair = dual_scaling(p, VectorXd::Zero(2));
  CHECK((pair.u - p.y).norm() == doctest::Approx(0.0));  // s = 1
  CHECK_THROWS_AS(dual_scaling(p, VectorXd::Zero(3)), DimensionMismatch);
}

TEST_CASE("sequential pair at gamma = 1 is near-optimal") {
  std::mt19937_64 rng(61);
  Problem p = testsupport::random_lasso(rng, 10, 20, 0.5);
  PrimalDualPair pair = sequential_pair(p, p.lambda, 1e-12);
  REQUIRE(pair.gamma.has_value());
  CHECK(*pair.gamma == doctest::Approx(1.0));
  CHECK(pair.linked);
  CHECK(duality_gap(p, pair.x, pair.u).value() <= 1e-11);
}

TEST_CASE("sequential pair above lambda_max collapses to the zero solution") {
  Problem p = identity_lasso();  // lambda_max = 2
  PrimalDualPair pair = sequential_pair(p, 4.0, 1e-12);
  CHECK(pair.x.norm() == doctest::Approx(0.0));
  // u = -grad f(0) / gamma = y / 4
  CHECK(pair.u[0] == doctest::Approx(0.5));
  CHECK(pair.u[1] == doctest::Approx(0.25));
  CHECK(pair.linked);
  CHECK(dual_feasible(p, pair.u));
  CHECK_THROWS_AS(sequential_pair(p, -1.0, 1e-12), std::invalid_argument);
}

TEST_CASE("sequential pair matches the orthonormal closed form") {
  std::mt19937_64 rng(67);
  MatrixXd A = testsupport::orthonormal_columns(12, 6, rng);
  VectorXd y = testsupport::random_vector(rng, 12, 2.0);
  double lmax = (A.transpose() * y).lpNorm<Eigen::Infinity>();
  Problem p = make_lasso({DesignMatrix(A), y, 0.3 * lmax, std::nullopt});
  double lambda0 = 0.6 * lmax;

  PrimalDualPair pair = sequential_pair(p, lambda0, 1e-12);
  auto want = testsupport::orthonormal_lasso_solution(A, y, lambda0);
  CHECK((pair.x - want.x).lpNorm<Eigen::Infinity>() <= 1e-8);
  // u = (y - A x_gamma) / gamma
  double gamma = lambda0 / p.lambda;
  CHECK((pair.u - want.u / gamma).lpNorm<Eigen::Infinity>() <= 1e-8);
  CHECK(pair.linked);
}

TEST_CASE("sequential pairs are linked for the logistic family") {
  std::mt19937_64 rng(71);
  Problem p = testsupport::random_logistic(rng, 12, 18, 0.4);
  PrimalDualPair pair = sequential_pair(p, 1.5 * p.lambda, 1e-12);
  CHECK(pair.linked);
  CHECK(dual_feasible(p, pair.u));
  CHECK(duality_gap(p, pair.x, pair.u).finite());
}

TEST_CASE("verify_linkage checks the subgradient condition") {
  Problem p = identity_lasso();
  VectorXd x(2), u(2);
  x << 1.0, 0.0;
  u << 1.0, 0.3;  // A^T u = (1, 0.3): sign match on the support, interior off
  CHECK(verify_linkage(p, x, u));
  u << 0.5, 0.3;  // support coordinate not at lambda
  CHECK_FALSE(verify_linkage(p, x, u));
  u << 1.0, 1.5;  // infeasible
  CHECK_FALSE(verify_linkage(p, x, u));
  CHECK_THROWS_AS(verify_linkage(p, x, VectorXd::Zero(3)),
                  DimensionMismatch);
}
