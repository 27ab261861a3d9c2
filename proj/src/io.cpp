#include "safeball/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "safeball/errors.hpp"

namespace safeball {

InstanceData load_libsvm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<Eigen::Triplet<double>> entries;
  std::vector<double> labels;
  Eigen::Index max_col = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double label;
    if (!(ls >> label))
      throw ParseError(path + ":" + std::to_string(lineno) + ": bad label");
    Eigen::Index row = static_cast<Eigen::Index>(labels.size());
    labels.push_back(label);
    std::string tok;
    while (ls >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": expected idx:value, got '" + tok + "'");
      long idx = 0;
      double val = 0.0;
      try {
        idx = std::stol(tok.substr(0, colon));
        val = std::stod(tok.substr(colon + 1));
      } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": bad entry '" + tok + "'");
      }
      if (idx < 1)
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": indices are 1-based");
      max_col = std::max<Eigen::Index>(max_col, idx);
      entries.emplace_back(row, static_cast<Eigen::Index>(idx - 1), val);
    }
  }
  if (labels.empty()) throw ParseError(path + ": no data rows");
  InstanceData data;
  data.A = DesignMatrix::from_entries(
      static_cast<Eigen::Index>(labels.size()), max_col, entries);
  data.y = Eigen::Map<Eigen::VectorXd>(labels.data(),
                                       static_cast<Eigen::Index>(labels.size()));
  return data;
}

InstanceData load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  std::vector<std::vector<double>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": bad number '" + cell + "'");
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": ragged row");
    if (row.size() < 2)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": need at least one feature and a response");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(path + ": no data rows");
  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index n = static_cast<Eigen::Index>(rows.front().size()) - 1;
  Eigen::MatrixXd A(m, n);
  Eigen::VectorXd y(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = rows[i][j];
    y[i] = rows[i][n];
  }
  return InstanceData{DesignMatrix(std::move(A)), std::move(y)};
}

InstanceData load_instance(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return load_csv(path);
  return load_libsvm(path);
}

InstanceData generate_synthetic(const SyntheticSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd A(spec.m, spec.n);
  for (Eigen::Index i = 0; i < spec.m; ++i)
    for (Eigen::Index j = 0; j < spec.n; ++j) A(i, j) = gauss(rng);

  Eigen::VectorXd x_true = Eigen::VectorXd::Zero(spec.n);
  const Eigen::Index support =
      std::max<Eigen::Index>(1, static_cast<Eigen::Index>(
                                    std::lround(spec.density * spec.n)));
  std::vector<Eigen::Index> idx(spec.n);
  for (Eigen::Index j = 0; j < spec.n; ++j) idx[j] = j;
  std::shuffle(idx.begin(), idx.end(), rng);
  for (Eigen::Index k = 0; k < support; ++k)
    x_true[idx[k]] = (rng() % 2 ? 1.0 : -1.0) * (1.0 + std::abs(gauss(rng)));

  Eigen::VectorXd y = A * x_true;
  for (Eigen::Index i = 0; i < spec.m; ++i) y[i] += spec.noise * gauss(rng);

  DesignMatrix dm(std::move(A));
  if (spec.normalize_columns) dm = normalize_columns(dm);
  return InstanceData{std::move(dm), std::move(y)};
}

InstanceData generate_synthetic_classification(const SyntheticSpec& spec) {
  InstanceData data = generate_synthetic(spec);
  for (Eigen::Index i = 0; i < data.y.size(); ++i)
    data.y[i] = data.y[i] >= 0.0 ? 1.0 : -1.0;
  return data;
}

DesignMatrix fold_labels(const DesignMatrix& A,
                         const Eigen::VectorXd& labels) {
  if (labels.size() != A.rows())
    throw DimensionMismatch("fold_labels: label/row mismatch");
  Eigen::MatrixXd d = A.to_dense();
  for (Eigen::Index i = 0; i < d.rows(); ++i) d.row(i) *= labels[i];
  return DesignMatrix(std::move(d));
}

DesignMatrix normalize_columns(const DesignMatrix& A) {
  Eigen::MatrixXd d = A.to_dense();
  for (Eigen::Index j = 0; j < d.cols(); ++j) {
    double nj = d.col(j).norm();
    if (nj > 0.0) d.col(j) /= nj;
  }
  return DesignMatrix(std::move(d));
}

void write_csv_instance(const InstanceData& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  Eigen::MatrixXd d = data.A.to_dense();
  for (Eigen::Index j = 0; j < d.cols(); ++j) out << "x" << j << ",";
  out << "y\n";
  char buf[64];
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", d(i, j));
      out << buf << ",";
    }
    std::snprintf(buf, sizeof buf, "%.17g", data.y[i]);
    out << buf << "\n";
  }
}

void write_libsvm_instance(const InstanceData& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  Eigen::MatrixXd d = data.A.to_dense();
  char buf[64];
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", data.y[i]);
    out << buf;
    for (Eigen::Index j = 0; j < d.cols(); ++j) {
      if (d(i, j) == 0.0) continue;
      std::snprintf(buf, sizeof buf, "%.17g", d(i, j));
      out << " " << (j + 1) << ":" << buf;
    }
    out << "\n";
  }
}

}  // namespace safeball
