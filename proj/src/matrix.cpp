#include "safeball/matrix.hpp"

#include <utility>

namespace safeball {

DesignMatrix::DesignMatrix(Eigen::MatrixXd dense)
    : sparse_(false),
      rows_(dense.rows()),
      cols_(dense.cols()),
      dense_(std::move(dense)) {
  cache_norms();
}

DesignMatrix::DesignMatrix(Eigen::SparseMatrix<double> sparse)
    : sparse_(true), rows_(sparse.rows()), cols_(sparse.cols()),
      csc_(std::move(sparse)) {
  csc_.makeCompressed();
  cache_norms();
}

DesignMatrix DesignMatrix::from_entries(
    Eigen::Index rows, Eigen::Index cols,
    const std::vector<Eigen::Triplet<double>>& entries) {
  const double density =
      rows * cols == 0 ? 1.0
                       : static_cast<double>(entries.size()) /
                             static_cast<double>(rows * cols);
  if (density < 0.25) {
    Eigen::SparseMatrix<double> s(rows, cols);
    s.setFromTriplets(entries.begin(), entries.end());
    return DesignMatrix(std::move(s));
  }
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(rows, cols);
  for (const auto& t : entries) d(t.row(), t.col()) += t.value();
  return DesignMatrix(std::move(d));
}

void DesignMatrix::cache_norms() {
  col_norms_.resize(cols_);
  for (Eigen::Index j = 0; j < cols_; ++j) {
    if (sparse_) {
      col_norms_[j] = csc_.col(j).norm();
    } else {
      col_norms_[j] = dense_.col(j).norm();
    }
  }
}

Eigen::VectorXd DesignMatrix::apply(const Eigen::VectorXd& x) const {
  return sparse_ ? Eigen::VectorXd(csc_ * x) : Eigen::VectorXd(dense_ * x);
}

Eigen::VectorXd DesignMatrix::apply_transpose(const Eigen::VectorXd& u) const {
  return sparse_ ? Eigen::VectorXd(csc_.transpose() * u)
                 : Eigen::VectorXd(dense_.transpose() * u);
}

double DesignMatrix::column_dot(Eigen::Index j,
                                const Eigen::VectorXd& v) const {
  if (!sparse_) return dense_.col(j).dot(v);
  double acc = 0.0;
  for (Eigen::SparseMatrix<double>::InnerIterator it(csc_, j); it; ++it)
    acc += it.value() * v[it.row()];
  return acc;
}

DesignMatrix DesignMatrix::select_columns(
    const std::vector<Eigen::Index>& keep) const {
  if (!sparse_) {
    Eigen::MatrixXd d(rows_, static_cast<Eigen::Index>(keep.size()));
    for (size_t k = 0; k < keep.size(); ++k) d.col(k) = dense_.col(keep[k]);
    return DesignMatrix(std::move(d));
  }
  std::vector<Eigen::Triplet<double>> entries;
  for (size_t k = 0; k < keep.size(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(csc_, keep[k]); it;
         ++it)
      entries.emplace_back(it.row(), static_cast<Eigen::Index>(k), it.value());
  }
  Eigen::SparseMatrix<double> s(rows_, static_cast<Eigen::Index>(keep.size()));
  s.setFromTriplets(entries.begin(), entries.end());
  return DesignMatrix(std::move(s));
}

Eigen::MatrixXd DesignMatrix::to_dense() const {
  return sparse_ ? Eigen::MatrixXd(csc_) : dense_;
}

}  // namespace safeball
