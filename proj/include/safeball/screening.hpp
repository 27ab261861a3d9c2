#pragma once

#include <vector>

#include "safeball/ball.hpp"
#include "safeball/problem.hpp"

namespace safeball {

/// Per-coordinate certified zeros of the primal solution.
struct ScreenMask {
  std::vector<char> flags;  // true = coordinate certified zero
  std::string ball_tag;
  int screened_count() const {
    int c = 0;
    for (char f : flags) c += f != 0;
    return c;
  }
  Eigen::Index size() const { return static_cast<Eigen::Index>(flags.size()); }
};

/// Certificate test for separable l1 terms: coordinate j is certified zero
/// when |a_j^T c| + r ||a_j||_2 < lambda, since the subgradient constraint is
/// then slack for every dual point in the ball. Columns are tested in
/// parallel; the result is schedule-independent.
ScreenMask screen_l1(const Problem& p, const Ball& b);

/// Serial reference of the same test, kept for validation and benchmarks.
ScreenMask screen_l1_serial(const Problem& p, const Ball& b);

struct ReducedProblem {
  Problem problem;
  std::vector<Eigen::Index> kept;  // reduced column -> original column

  /// Re-inflates a reduced solution with zeros at the screened coordinates.
  Eigen::VectorXd inflate(const Eigen::VectorXd& x_reduced,
                          Eigen::Index n_full) const;
};

/// Removes the certified-zero columns. With every column screened the result
/// is an empty problem whose re-inflated solution is the zero vector.
ReducedProblem reduce_problem(const Problem& p, const ScreenMask& mask);

}  // namespace safeball
