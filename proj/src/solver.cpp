#include "safeball/solver.hpp"

#include <Eigen/Cholesky>
#include <algorithm>
#include <cmath>
#include <random>

#include "safeball/errors.hpp"
#include "safeball/pairs.hpp"
#include "safeball/problems.hpp"
#include "safeball/screening.hpp"

namespace safeball {

Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v, double t) {
  if (t < 0.0) throw std::invalid_argument("soft_threshold: negative t");
  Eigen::VectorXd out(v.size());
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    double a = std::abs(v[j]) - t;
    out[j] = a > 0.0 ? (v[j] > 0.0 ? a : -a) : 0.0;
  }
  return out;
}

double estimate_step(const Problem& p) {
  const Eigen::Index n = p.n();
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(n);
  for (Eigen::Index j = 0; j < n; ++j) v[j] = gauss(rng);
  v.normalize();
  double sigma2 = 0.0;
  for (int it = 0; it < 50; ++it) {
    Eigen::VectorXd w = p.A.apply_transpose(p.A.apply(v));
    sigma2 = w.norm();
    if (sigma2 == 0.0) break;
    v = w / sigma2;
  }
  double lips = sigma2 / p.f.alpha;
  return lips > 1e-12 ? 1.0 / lips : 1.0;
}

namespace {

double smooth_value(const Problem& p, const Eigen::VectorXd& ax) {
  return p.f.value(ax);
}

Eigen::VectorXd inflate(const std::vector<Eigen::Index>& kept,
                        const Eigen::VectorXd& x_red, Eigen::Index n) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(n);
  for (size_t k = 0; k < kept.size(); ++k) full[kept[k]] = x_red[k];
  return full;
}

}  // namespace

SolveResult prox_grad_solve(const Problem& p, const SolveOptions& opts) {
  if (opts.gap_tolerance <= 0.0)
    throw std::invalid_argument("prox_grad_solve: gap_tolerance must be > 0");
  if (opts.screening.enabled && opts.screening.period < 1)
    throw std::invalid_argument("prox_grad_solve: screening period must be >= 1");

  const Eigen::Index n_full = p.n();
  Problem cur = p;
  std::vector<Eigen::Index> kept(n_full);
  for (Eigen::Index j = 0; j < n_full; ++j) kept[j] = j;

  Eigen::VectorXd x = Eigen::VectorXd::Zero(cur.n());
  Eigen::VectorXd z = x;
  double t_momentum = 1.0;
  double step = estimate_step(cur);

  SolveResult res;
  double best_gap = std::numeric_limits<double>::infinity();
  double obj_x = primal_objective(cur, x).value();

  auto full_pair = [&](const Eigen::VectorXd& x_red) {
    Eigen::VectorXd x_f = inflate(kept, x_red, n_full);
    return dual_scaling(p, x_f);
  };

  int it = 0;
  bool restarted = false;  // previous iteration took a momentum-free step
  for (it = 1; it <= opts.max_iters; ++it) {
    Eigen::VectorXd az = cur.A.apply(z);
    double fz = smooth_value(cur, az);
    Eigen::VectorXd grad_z = cur.A.apply_transpose(cur.f.gradient(az));

    // Backtracking on the quadratic upper bound.
    Eigen::VectorXd x_new;
    for (;;) {
      x_new = cur.g.prox(z - step * grad_z, step);
      Eigen::VectorXd diff = x_new - z;
      double fx = smooth_value(cur, cur.A.apply(x_new));
      double bound =
          fz + grad_z.dot(diff) + diff.squaredNorm() / (2.0 * step);
      if (fx <= bound + 1e-12 * (1.0 + std::abs(bound)) || step < 1e-16)
        break;
      step *= 0.5;
    }

    double obj_new = primal_objective(cur, x_new).value();
    // The restart tolerance matches the backtracking fudge: an increase at
    // rounding-noise level must not count as a failed step, or restarts fire
    // every iteration near the optimum and the step collapses.
    if (obj_new > obj_x + 1e-12 * (1.0 + std::abs(obj_x))) {
      // Monotone restart: keep the best iterate, drop the momentum. Two
      // restarts in a row mean even a momentum-free step increased the
      // objective, so the step length is too long (the power-iteration bound
      // was optimistic); shorten it, or the restart would reject the same
      // step forever.
      if (restarted) step *= 0.5;
      restarted = true;
      x_new = x;
      obj_new = obj_x;
      t_momentum = 1.0;
    } else {
      restarted = false;
    }
    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_momentum * t_momentum));
    z = x_new + ((t_momentum - 1.0) / t_next) * (x_new - x);
    x = x_new;
    obj_x = obj_new;
    t_momentum = t_next;

    bool check_now = (it % opts.gap_check_period == 0) || it == opts.max_iters;
    if (check_now) {
      PrimalDualPair pd = full_pair(x);
      double gap = duality_gap(p, inflate(kept, x, n_full), pd.u).value();
      best_gap = std::min(best_gap, gap);
      res.gap_trace.push_back(best_gap);
      if (best_gap <= opts.gap_tolerance) {
        res.converged = true;
        break;
      }
    }

    if (opts.screening.enabled && it % opts.screening.period == 0) {
      PrimalDualPair pd_red = dual_scaling(cur, x);
      Ball b = opts.screening.ball == "gap"
                   ? gap_ball(cur, x, pd_red.u)
                   : ryu_ball(cur, x, pd_red.u);
      ScreenMask mask = screen_l1(cur, b);
      if (mask.screened_count() > 0) {
        std::vector<Eigen::Index> keep_local;
        for (Eigen::Index j = 0; j < cur.n(); ++j)
          if (!mask.flags[j]) keep_local.push_back(j);
        std::vector<Eigen::Index> kept_new;
        Eigen::VectorXd x_new_red(keep_local.size()), z_new(keep_local.size());
        for (size_t k = 0; k < keep_local.size(); ++k) {
          kept_new.push_back(kept[keep_local[k]]);
          x_new_red[k] = x[keep_local[k]];
          z_new[k] = z[keep_local[k]];
        }
        kept = std::move(kept_new);
        cur = with_matrix(cur, cur.A.select_columns(keep_local));
        x = x_new_red;
        z = z_new;
        step = estimate_step(cur);
        obj_x = primal_objective(cur, x).value();
      }
      res.screening_trace.push_back(
          static_cast<int>(n_full - static_cast<Eigen::Index>(kept.size())));
    }
  }

  res.iterations = std::min(it, opts.max_iters);
  res.x_final = inflate(kept, x, n_full);
  PrimalDualPair pd = dual_scaling(p, res.x_final);
  res.u_final = pd.u;
  return res;
}

namespace {

// Exact solve of the problem restricted to a support/sign pattern. Returns
// false when the pattern is inconsistent (sign flip, singular system).
bool polish_on_support(const Problem& p, std::vector<Eigen::Index> support,
                       Eigen::VectorXd signs, Eigen::VectorXd* x_out,
                       Eigen::VectorXd* u_out) {
  const Eigen::Index n = p.n();
  for (int round = 0; round < 12; ++round) {
    if (support.empty()) {
      *x_out = Eigen::VectorXd::Zero(n);
      Eigen::VectorXd grad0 = p.f.gradient(p.A.apply(*x_out));
      *u_out = -grad0;
      return true;
    }
    DesignMatrix as = p.A.select_columns(support);
    Eigen::MatrixXd As = as.to_dense();
    const Eigen::Index k = As.cols();
    Eigen::VectorXd xs(k);

    if (p.family == Family::kLeastSquaresL1 ||
        p.family == Family::kElasticNet) {
      Eigen::MatrixXd gram = As.transpose() * As;
      if (p.family == Family::kElasticNet)
        gram.diagonal().array() += p.lambda2;
      Eigen::VectorXd rhs = As.transpose() * p.y - p.lambda * signs;
      Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
      if (ldlt.info() != Eigen::Success) return false;
      xs = ldlt.solve(rhs);
    } else if (p.family == Family::kLogisticL1) {
      xs = Eigen::VectorXd::Zero(k);
      // Warm start from the unregularized-looking quadratic at 0.
      for (int newton = 0; newton < 200; ++newton) {
        Eigen::VectorXd zs = As * xs;
        Eigen::VectorXd gf = p.f.gradient(zs);
        Eigen::VectorXd grad = As.transpose() * gf + p.lambda * signs;
        if (grad.lpNorm<Eigen::Infinity>() <
            1e-13 * std::max(1.0, p.lambda))
          break;
        Eigen::VectorXd w(zs.size());
        for (Eigen::Index i = 0; i < zs.size(); ++i) {
          double s = -gf[i];  // sigmoid in (0,1)
          w[i] = std::max(s * (1.0 - s), 1e-12);
        }
        Eigen::MatrixXd hess =
            As.transpose() * w.asDiagonal() * As;
        hess.diagonal().array() += 1e-14;
        Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
        if (ldlt.info() != Eigen::Success) return false;
        Eigen::VectorXd dir = -ldlt.solve(grad);
        double phi0 = p.f.value(zs) + p.lambda * signs.dot(xs);
        double t = 1.0;
        while (t > 1e-14) {
          Eigen::VectorXd cand = xs + t * dir;
          double phi = p.f.value(As * cand) + p.lambda * signs.dot(cand);
          if (phi <= phi0 + 1e-4 * t * grad.dot(dir)) break;
          t *= 0.5;
        }
        xs += t * dir;
        if (t * dir.lpNorm<Eigen::Infinity>() < 1e-16) break;
      }
    } else {
      return false;  // no polish for generic-norm regularizers
    }

    // Drop sign-flipped coordinates and retry.
    std::vector<Eigen::Index> support_next;
    Eigen::VectorXd signs_next(k);
    Eigen::Index kn = 0;
    for (Eigen::Index j = 0; j < k; ++j) {
      if (xs[j] * signs[j] > 0.0) {
        support_next.push_back(support[j]);
        signs_next[kn++] = signs[j];
      }
    }
    if (kn == k) {
      *x_out = Eigen::VectorXd::Zero(n);
      for (Eigen::Index j = 0; j < k; ++j) (*x_out)[support[j]] = xs[j];
      Eigen::VectorXd grad = p.f.gradient(p.A.apply(*x_out));
      *u_out = -grad;
      return true;
    }
    support = std::move(support_next);
    signs = signs_next.head(kn);
  }
  return false;
}

}  // namespace

ReferenceSolution reference_solve(const Problem& p, double gap_target) {
  bool can_polish = p.family != Family::kLeastSquaresNorm;

  SolveOptions opts;
  opts.gap_tolerance = can_polish ? std::max(gap_target, 1e-9) : gap_target;
  opts.max_iters = 1000000;
  opts.gap_check_period = 10;

  Eigen::VectorXd x;
  double fista_tol = opts.gap_tolerance;
  for (int attempt = 0; attempt < 6; ++attempt) {
    opts.gap_tolerance = fista_tol;
    SolveResult r = prox_grad_solve(p, opts);
    x = r.x_final;

    if (can_polish) {
      std::vector<Eigen::Index> support;
      Eigen::VectorXd signs(p.n());
      Eigen::Index k = 0;
      for (Eigen::Index j = 0; j < p.n(); ++j) {
        if (x[j] != 0.0) {
          support.push_back(j);
          signs[k++] = x[j] > 0.0 ? 1.0 : -1.0;
        }
      }
      Eigen::VectorXd x_pol, u_pol;
      if (polish_on_support(p, support, signs.head(k), &x_pol, &u_pol)) {
        ExtReal gap = duality_gap(p, x_pol, u_pol);
        if (gap.finite() && gap.value() <= gap_target)
          return ReferenceSolution{x_pol, u_pol, gap.value()};
      }
    } else {
      PrimalDualPair pd = dual_scaling(p, x);
      ExtReal gap = duality_gap(p, x, pd.u);
      if (gap.finite() && gap.value() <= gap_target)
        return ReferenceSolution{x, pd.u, gap.value()};
    }
    fista_tol = std::max(fista_tol * 1e-2, 1e-15);
  }
  throw SolverFailed("reference_solve: gap target " +
                     std::to_string(gap_target) + " not certified");
}

}  // namespace safeball
