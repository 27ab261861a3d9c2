#include <doctest.h>

#include <random>

#include "safeball/ball.hpp"
#include "safeball/errors.hpp"
#include "safeball/pairs.hpp"
#include "safeball/problems.hpp"
#include "safeball/screening.hpp"
#include "safeball/solver.hpp"
#include "support.hpp"

using namespace safeball;
using testsupport::identity_lasso;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("worked screening example end to end") {
  Problem p = identity_lasso(2.0, 0.5, 1.5);
  Ball b = ryu_ball(p, VectorXd::Zero(2), VectorXd::Zero(2));
  CHECK(b.radius == doctest::Approx(std::sqrt(1.0625)));

  ScreenMask mask = screen_l1(p, b);
  // column 1: |0.25| + r < 1.5 certified; column 0: 1 + r > 1.5 kept
  CHECK(mask.flags[0] == 0);
  CHECK(mask.flags[1] == 1);
  CHECK(mask.screened_count() == 1);

  ReducedProblem red = reduce_problem(p, mask);
  CHECK(red.problem.n() == 1);
  CHECK(red.kept == std::vector<Eigen::Index>{0});

  SolveOptions opts;
  opts.gap_tolerance = 1e-12;
  SolveResult r = prox_grad_solve(red.problem, opts);
  VectorXd full = red.inflate(r.x_final, p.n());
  // matches soft-threshold(y, lambda) of the unreduced problem
  CHECK(full[0] == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(full[1] == doctest::Approx(0.0));
}

TEST_CASE("radius-zero ball at the dual optimum screens the strict zeros") {
  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 10; ++rep) {
    Problem p = testsupport::random_lasso(rng, 10, 25, 0.5);
    ReferenceSolution ref = reference_solve(p, 1e-12);
    Ball point{ref.u, 0.0, "point"};
    ScreenMask mask = screen_l1(p, point);
    for (Eigen::Index j = 0; j < p.n(); ++j) {
      double score = std::abs(p.A.column_dot(j, ref.u));
      if (mask.flags[j]) {
        CHECK(score < p.lambda);
        CHECK(std::abs(ref.x[j]) <= 1e-9);
      }
      if (score < p.lambda * (1.0 - 1e-6)) CHECK(mask.flags[j] == 1);
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(79);
  for (int rep = 0; rep < 5; ++rep) {
    Problem p = testsupport::random_lasso(rng, 20, 300, 0.4);
    PrimalDualPair pair = dual_scaling(p, VectorXd::Zero(p.n()));
    Ball b = ryu_ball(p, pair.x, pair.u);
    CHECK(screen_l1(p, b).flags == screen_l1_serial(p, b).flags);
  }
}

TEST_CASE("a nested ball never screens fewer columns") {
  std::mt19937_64 rng(83);
  Problem p = testsupport::random_lasso(rng, 15, 60, 0.5);
  SolveOptions opts;
  opts.gap_tolerance = 1e-4;
  SolveResult r = prox_grad_solve(p, opts);
  Ball ryu = ryu_ball(p, r.x_final, r.u_final);
  Ball gap = gap_ball(p, r.x_final, r.u_final);
  REQUIRE(is_subset(ryu, gap));
  ScreenMask inner = screen_l1(p, ryu);
  ScreenMask outer = screen_l1(p, gap);
  for (Eigen::Index j = 0; j < p.n(); ++j)
    if (outer.flags[j]) CHECK(inner.flags[j] == 1);
  CHECK(inner.screened_count() >= outer.screened_count());
}

TEST_CASE("screening soundness against reference solutions") {
  std::mt19937_64 rng(89);
  for (int rep = 0; rep < 15; ++rep) {
    Problem p = testsupport::random_lasso(rng, 12, 30, 0.3 + 0.05 * (rep % 8));
    ReferenceSolution ref = reference_solve(p, 1e-12);
    SolveOptions opts;
    opts.gap_tolerance = 1e-3;
    SolveResult it = prox_grad_solve(p, opts);
    for (const Ball& b : {ryu_ball(p, it.x_final, it.u_final),
                          gap_ball(p, it.x_final, it.u_final),
                          sasvi_ball(p, it.u_final)}) {
      ScreenMask mask = screen_l1(p, b);
      for (Eigen::Index j = 0; j < p.n(); ++j)
        if (mask.flags[j]) CHECK(std::abs(ref.x[j]) <= 1e-9);
    }
  }
}

TEST_CASE("screening the elastic net uses the l1 level") {
  std::mt19937_64 rng(97);
  Problem p = testsupport::random_elastic_net(rng, 12, 30, 0.6);
  ReferenceSolution ref = reference_solve(p, 1e-12);
  Ball b = ryu_ball(p, ref.x, ref.u);
  ScreenMask mask = screen_l1(p, b);
  for (Eigen::Index j = 0; j < p.n(); ++j)
    if (mask.flags[j]) CHECK(std::abs(ref.x[j]) <= 1e-9);
}

TEST_CASE("all-screened masks reduce to a trivial problem") {
  // lambda above lambda_max: x* = 0 and u* = y certifies every column
  Problem p = identity_lasso(2.0, 1.0, 2.5);
  Ball point{p.y, 0.0, "point"};
  ScreenMask mask = screen_l1(p, point);
  REQUIRE(mask.screened_count() == 2);
  ReducedProblem red = reduce_problem(p, mask);
  CHECK(red.problem.n() == 1);
  SolveOptions opts;
  SolveResult r = prox_grad_solve(red.problem, opts);
  CHECK(red.inflate(r.x_final, p.n()).norm() == doctest::Approx(0.0));
}

TEST_CASE("boundary coordinates are never screened") {
  // x* = (0.1, 0): |a_0^T u*| = lambda exactly and the strict test keeps it
  Problem p = identity_lasso(2.0, 1.0, 1.9);
  ReferenceSolution ref = reference_solve(p, 1e-12);
  Ball point{ref.u, 0.0, "point"};
  ScreenMask mask = screen_l1(p, point);
  CHECK(mask.flags[0] == 0);
  CHECK(mask.flags[1] == 1);  // |a_1^T u*| = 1 < 1.9
}

TEST_CASE("family and dimension guards") {
  MatrixXd A = MatrixXd::Identity(2, 2);
  VectorXd y(2);
  y << 3.0, 4.0;
  Problem p = make_lasso({DesignMatrix(A), y, 1.0, l2_norm_handle()});
  Ball b{VectorXd::Zero(2), 1.0, "gap"};
  CHECK_THROWS_AS(screen_l1(p, b), WrongFamily);

  Problem l1p = identity_lasso();
  Ball wrong{VectorXd::Zero(3), 1.0, "gap"};
  CHECK_THROWS_AS(screen_l1(l1p, wrong), DimensionMismatch);
  ScreenMask short_mask;
  short_mask.flags = {1};
  CHECK_THROWS_AS(reduce_problem(l1p, short_mask), DimensionMismatch);
}
