#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "safeball/harness.hpp"
#include "safeball/json.hpp"
#include "safeball/pairs.hpp"
#include "safeball/problems.hpp"
#include "safeball/screening.hpp"
#include "safeball/solver.hpp"

namespace {

using namespace safeball;

InstanceFamily parse_family(const std::string& s) {
  if (s == "lasso") return InstanceFamily::kLasso;
  if (s == "logistic") return InstanceFamily::kLogistic;
  if (s == "elastic-net") return InstanceFamily::kElasticNet;
  throw CLI::ValidationError("family", "expected lasso|logistic|elastic-net");
}

std::vector<InstanceSource> synthetic_batch(int count, Eigen::Index m,
                                            Eigen::Index n, double density,
                                            double noise, std::uint64_t seed,
                                            InstanceFamily family) {
  std::vector<InstanceSource> out;
  for (int i = 0; i < count; ++i) {
    InstanceSource src;
    src.kind = InstanceSource::Kind::kSynthetic;
    src.name = "synthetic-" + std::to_string(seed + i);
    src.synthetic = SyntheticSpec{m, n, density, noise, seed + i, true};
    src.family = family;
    out.push_back(std::move(src));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Safe-ball construction and screening toolkit"};
  app.set_config("--config", "", "key=value configuration file");
  app.require_subcommand(1);

  std::string out_path = "report.json";
  std::string format = "json";
  std::uint64_t seed = 42;
  app.add_option("--seed", seed, "base RNG seed")->capture_default_str();
  app.add_option("--out", out_path, "output path")->capture_default_str();
  app.add_option("--format", format, "json or csv")->capture_default_str();

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a synthetic instance");
  Eigen::Index gen_m = 50, gen_n = 100;
  double gen_density = 0.2, gen_noise = 0.1;
  bool gen_normalize = true, gen_classification = false;
  gen->add_option("--m", gen_m)->capture_default_str();
  gen->add_option("--n", gen_n)->capture_default_str();
  gen->add_option("--density", gen_density)->capture_default_str();
  gen->add_option("--noise", gen_noise)->capture_default_str();
  gen->add_flag("--normalize,!--no-normalize", gen_normalize,
                "unit-norm columns");
  gen->add_flag("--classification", gen_classification, "emit +/-1 labels");

  // --- solve -------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "solve one instance");
  std::string solve_input, solve_family = "lasso", solve_screen = "off";
  double solve_lambda_frac = 0.5, solve_tol = 1e-8, solve_l2_ratio = 0.5;
  int solve_max_iters = 200000, solve_period = 10;
  solve->add_option("--input", solve_input, "csv or libsvm file; empty = synthetic");
  solve->add_option("--family", solve_family)->capture_default_str();
  solve->add_option("--lambda-frac", solve_lambda_frac, "lambda / lambda_max")
      ->capture_default_str();
  solve->add_option("--lambda2-ratio", solve_l2_ratio)->capture_default_str();
  solve->add_option("--tol", solve_tol)->capture_default_str();
  solve->add_option("--max-iters", solve_max_iters)->capture_default_str();
  solve->add_option("--screen", solve_screen, "off, gap or ryu")
      ->capture_default_str();
  solve->add_option("--period", solve_period, "screening period")
      ->capture_default_str();
  solve->add_option("--m", gen_m)->capture_default_str();
  solve->add_option("--n", gen_n)->capture_default_str();

  // --- compare-balls -----------------------------------------------------
  auto* cmp = app.add_subcommand("compare-balls",
                                 "radius / inclusion / screening comparison");
  int cmp_instances = 5;
  std::string cmp_family = "lasso";
  std::vector<double> cmp_fracs = {0.3, 0.5, 0.8};
  std::vector<std::string> cmp_strategies = {"zero", "iterate", "sequential"};
  cmp->add_option("--num-instances", cmp_instances)->capture_default_str();
  cmp->add_option("--family", cmp_family)->capture_default_str();
  cmp->add_option("--lambda-fracs", cmp_fracs)->capture_default_str();
  cmp->add_option("--strategies", cmp_strategies)->capture_default_str();
  cmp->add_option("--m", gen_m)->capture_default_str();
  cmp->add_option("--n", gen_n)->capture_default_str();
  bool cmp_timings = true;
  cmp->add_flag("--timings,!--no-timings", cmp_timings,
                "record wall times (disable for byte-stable reports)");

  // --- screen-run --------------------------------------------------------
  auto* srun = app.add_subcommand("screen-run",
                                  "dynamic-screening speedup experiment");
  int srun_instances = 3, srun_period = 10;
  std::string srun_family = "lasso";
  std::vector<double> srun_fracs = {0.5};
  double srun_tol = 1e-8;
  srun->add_option("--num-instances", srun_instances)->capture_default_str();
  srun->add_option("--family", srun_family)->capture_default_str();
  srun->add_option("--lambda-fracs", srun_fracs)->capture_default_str();
  srun->add_option("--tol", srun_tol)->capture_default_str();
  srun->add_option("--period", srun_period)->capture_default_str();
  srun->add_option("--m", gen_m)->capture_default_str();
  srun->add_option("--n", gen_n)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      SyntheticSpec spec{gen_m, gen_n, gen_density, gen_noise, seed,
                         gen_normalize};
      InstanceData data = gen_classification
                              ? generate_synthetic_classification(spec)
                              : generate_synthetic(spec);
      if (out_path.size() >= 4 &&
          out_path.substr(out_path.size() - 4) == ".csv")
        write_csv_instance(data, out_path);
      else
        write_libsvm_instance(data, out_path);
      std::cout << "wrote " << data.A.rows() << "x" << data.A.cols()
                << " instance to " << out_path << "\n";
    } else if (solve->parsed()) {
      InstanceSource src;
      src.family = parse_family(solve_family);
      src.lambda2_ratio = solve_l2_ratio;
      if (solve_input.empty()) {
        src.kind = InstanceSource::Kind::kSynthetic;
        src.name = "synthetic-" + std::to_string(seed);
        src.synthetic = SyntheticSpec{gen_m, gen_n, 0.2, 0.1, seed, true};
      } else {
        src.kind = InstanceSource::Kind::kFile;
        src.name = solve_input;
        src.path = solve_input;
      }
      Problem p = instantiate(src, solve_lambda_frac);
      SolveOptions opts;
      opts.gap_tolerance = solve_tol;
      opts.max_iters = solve_max_iters;
      if (solve_screen != "off") {
        opts.screening.enabled = true;
        opts.screening.ball = solve_screen;
        opts.screening.period = solve_period;
      }
      SolveResult r = prox_grad_solve(p, opts);
      std::ofstream out(out_path);
      out << to_json(r).dump(2) << "\n";
      std::cout << (r.converged ? "converged" : "budget exhausted") << " in "
                << r.iterations << " iterations, final gap "
                << (r.gap_trace.empty() ? -1.0 : r.gap_trace.back()) << "\n";
    } else if (cmp->parsed()) {
      auto sources = synthetic_batch(cmp_instances, gen_m, gen_n, 0.2, 0.1,
                                     seed, parse_family(cmp_family));
      ComparisonConfig cfg;
      cfg.lambda_fracs = cmp_fracs;
      cfg.pair_strategies = cmp_strategies;
      cfg.record_timings = cmp_timings;
      ExperimentReport report = run_ball_comparison(sources, cfg);
      emit_report(report, format, out_path);
      std::cout << report.records.size() << " ball records -> " << out_path
                << "\n";
    } else if (srun->parsed()) {
      auto sources = synthetic_batch(srun_instances, gen_m, gen_n, 0.2, 0.1,
                                     seed, parse_family(srun_family));
      DynamicScreeningConfig cfg;
      cfg.lambda_fracs = srun_fracs;
      cfg.gap_tolerance = srun_tol;
      cfg.period = srun_period;
      ExperimentReport report = run_dynamic_screening(sources, cfg);
      emit_report(report, format, out_path);
      std::cout << report.dynamic_runs.size() << " runs -> " << out_path
                << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
