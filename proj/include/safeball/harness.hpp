#pragma once

#include <string>
#include <vector>

#include "safeball/io.hpp"
#include "safeball/problem.hpp"

namespace safeball {

enum class InstanceFamily { kLasso, kLogistic, kElasticNet };

/// One problem instance for the experiment drivers: a file path or a
/// synthetic spec, plus the family it should be solved as.
struct InstanceSource {
  enum class Kind { kFile, kSynthetic } kind = Kind::kSynthetic;
  std::string name;
  std::string path;  // kFile only
  SyntheticSpec synthetic;
  InstanceFamily family = InstanceFamily::kLasso;
  double lambda2_ratio = 0.5;  // elastic net: lambda2 = ratio * lambda1
};

/// Builds the Problem at the given fraction of lambda_max.
Problem instantiate(const InstanceSource& src, double lambda_frac);

struct BallRecord {
  std::string instance;
  double lambda_frac = 0.0;
  std::string pair_strategy;
  std::string ball;
  double radius = 0.0;
  double center_norm = 0.0;
  bool contains_ustar = false;
  int screened = 0;
  double time_ms = 0.0;
};

struct InclusionRecord {
  std::string instance;
  double lambda_frac = 0.0;
  std::string pair_strategy;
  std::string inner;
  std::string outer;
  bool holds = false;
};

struct DynamicRunRecord {
  std::string instance;
  double lambda_frac = 0.0;
  std::string ball;  // "none", "gap" or "ryu"
  int iterations = 0;
  int final_screened = 0;
  double time_ms = 0.0;
  std::vector<int> screening_trace;
  std::vector<double> gap_trace;
};

struct ExperimentReport {
  std::vector<BallRecord> records;
  std::vector<InclusionRecord> inclusions;
  std::vector<DynamicRunRecord> dynamic_runs;
};

struct ComparisonConfig {
  std::vector<double> lambda_fracs = {0.3, 0.5, 0.8};
  std::vector<std::string> pair_strategies = {"zero", "iterate", "sequential"};
  double sequential_lambda0_factor = 2.0;  // lambda0 = factor * lambda
  double iterate_gap = 1e-3;               // loose solve for "iterate"
  double pair_tol = 1e-12;
  double reference_gap = 1e-12;
  bool record_timings = true;  // false gives byte-stable reports across runs
};

/// Builds every applicable ball for each (instance, lambda, pair) cell,
/// records radii, u*-membership, inclusion relations and screening counts.
/// A safeness failure aborts with a diagnostic, it is never reported as a
/// row.
ExperimentReport run_ball_comparison(const std::vector<InstanceSource>& instances,
                                     const ComparisonConfig& config);

struct DynamicScreeningConfig {
  std::vector<double> lambda_fracs = {0.5};
  double gap_tolerance = 1e-8;
  int period = 10;
  int max_iters = 200000;
  bool record_timings = true;
};

/// Solves each instance with screening off / GAP / RYU and records screened
/// fractions over time together with wall-clock timings.
ExperimentReport run_dynamic_screening(
    const std::vector<InstanceSource>& instances,
    const DynamicScreeningConfig& config);

/// Writes a report as JSON or CSV ("json"/"csv"). Output is byte-stable for
/// identical reports: keys sorted, floats with 17 significant digits.
void emit_report(const ExperimentReport& report, const std::string& format,
                 const std::string& path);

}  // namespace safeball
