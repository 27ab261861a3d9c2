#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

namespace safeball {

/// Design matrix with fast column access. Stores either a dense column-major
/// matrix or a compressed-sparse-column matrix; `from_entries` picks the
/// layout by density (CSC below 25% nonzeros).
class DesignMatrix {
 public:
  DesignMatrix() = default;
  explicit DesignMatrix(Eigen::MatrixXd dense);
  explicit DesignMatrix(Eigen::SparseMatrix<double> sparse);

  static DesignMatrix from_entries(
      Eigen::Index rows, Eigen::Index cols,
      const std::vector<Eigen::Triplet<double>>& entries);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }
  bool is_sparse() const { return sparse_; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;            // A x
  Eigen::VectorXd apply_transpose(const Eigen::VectorXd& u) const;  // A^T u

  double column_dot(Eigen::Index j, const Eigen::VectorXd& v) const;
  double column_norm(Eigen::Index j) const { return col_norms_[j]; }
  const Eigen::VectorXd& column_norms() const { return col_norms_; }

  DesignMatrix select_columns(const std::vector<Eigen::Index>& keep) const;

  Eigen::MatrixXd to_dense() const;

 private:
  void cache_norms();

  bool sparse_ = false;
  Eigen::Index rows_ = 0, cols_ = 0;
  Eigen::MatrixXd dense_;
  Eigen::SparseMatrix<double> csc_;
  Eigen::VectorXd col_norms_;
};

}  // namespace safeball
