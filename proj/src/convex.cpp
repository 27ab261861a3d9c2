#include "safeball/errors.hpp"
#include "safeball/problem.hpp"

namespace safeball {

namespace {

void check_primal_dim(const Problem& p, const Eigen::VectorXd& x) {
  if (x.size() != p.n())
    throw DimensionMismatch("primal vector has length " +
                            std::to_string(x.size()) + ", expected " +
                            std::to_string(p.n()));
}

void check_dual_dim(const Problem& p, const Eigen::VectorXd& u) {
  if (u.size() != p.m())
    throw DimensionMismatch("dual vector has length " +
                            std::to_string(u.size()) + ", expected " +
                            std::to_string(p.m()));
}

}  // namespace

ExtReal primal_objective(const Problem& p, const Eigen::VectorXd& x) {
  check_primal_dim(p, x);
  ExtReal gx = p.g.value(x);
  if (gx.is_pos_inf()) return ExtReal::infinity();
  return ExtReal(p.f.value(p.A.apply(x))) + gx;
}

ExtReal dual_objective(const Problem& p, const Eigen::VectorXd& u) {
  check_dual_dim(p, u);
  ExtReal fs = p.f.conjugate(-u);
  if (fs.is_pos_inf()) return ExtReal::neg_infinity();
  ExtReal gs = p.g.conjugate(p.A.apply_transpose(u));
  if (gs.is_pos_inf()) return ExtReal::neg_infinity();
  return -(fs + gs);
}

ExtReal duality_gap(const Problem& p, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& u) {
  ExtReal P = primal_objective(p, x);
  ExtReal D = dual_objective(p, u);
  if (P.is_pos_inf() || D.is_neg_inf()) return ExtReal::infinity();
  return P - D;
}

ExtReal fenchel_divergence(const Problem& p, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& u) {
  check_primal_dim(p, x);
  check_dual_dim(p, u);
  ExtReal fs = p.f.conjugate(-u);
  if (fs.is_pos_inf()) return ExtReal::infinity();
  Eigen::VectorXd ax = p.A.apply(x);
  return ExtReal(p.f.value(ax)) + fs + ExtReal(u.dot(ax));
}

ExtReal bregman_divergence(const Problem& p, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& u) {
  check_primal_dim(p, x);
  check_dual_dim(p, u);
  ExtReal fs = p.f.conjugate(-u);
  if (fs.is_pos_inf()) return ExtReal::infinity();
  Eigen::VectorXd ax = p.A.apply(x);
  Eigen::VectorXd grad = p.f.gradient(ax);
  ExtReal fs_grad = p.f.conjugate(grad);
  return fs - fs_grad + ExtReal(ax.dot(u + grad));
}

}  // namespace safeball
