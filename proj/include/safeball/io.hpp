#pragma once

#include <cstdint>
#include <string>

#include "safeball/matrix.hpp"

namespace safeball {

/// Seeded synthetic instance description; the seed fully determines the
/// generated data.
struct SyntheticSpec {
  Eigen::Index m = 20;
  Eigen::Index n = 50;
  double density = 0.2;  // fraction of nonzero coordinates in the planted x
  double noise = 0.1;
  std::uint64_t seed = 0;
  bool normalize_columns = true;
};

struct InstanceData {
  DesignMatrix A;
  Eigen::VectorXd y;  // response, or +/-1 labels for classification data
};

/// LIBSVM sparse text: "label idx:val ...", 1-based indices.
InstanceData load_libsvm(const std::string& path);

/// Dense CSV with a header row; last column is the response.
InstanceData load_csv(const std::string& path);

/// Picks the parser from the file extension (.csv vs anything else).
InstanceData load_instance(const std::string& path);

InstanceData generate_synthetic(const SyntheticSpec& spec);

/// Classification variant of the synthetic generator: y holds +/-1 labels.
InstanceData generate_synthetic_classification(const SyntheticSpec& spec);

/// Multiplies each row of A by the corresponding +/-1 label, matching the
/// f(Ax) form used by the logistic loss.
DesignMatrix fold_labels(const DesignMatrix& A, const Eigen::VectorXd& labels);

/// Rescales every nonzero column to unit Euclidean norm.
DesignMatrix normalize_columns(const DesignMatrix& A);

void write_csv_instance(const InstanceData& data, const std::string& path);
void write_libsvm_instance(const InstanceData& data, const std::string& path);

}  // namespace safeball
