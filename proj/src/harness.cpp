#include "safeball/harness.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>

#include <json.hpp>

#include "safeball/ball.hpp"
#include "safeball/errors.hpp"
#include "safeball/pairs.hpp"
#include "safeball/problems.hpp"
#include "safeball/screening.hpp"
#include "safeball/solver.hpp"

namespace safeball {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

InstanceData materialize(const InstanceSource& src) {
  if (src.kind == InstanceSource::Kind::kFile) return load_instance(src.path);
  if (src.family == InstanceFamily::kLogistic)
    return generate_synthetic_classification(src.synthetic);
  return generate_synthetic(src.synthetic);
}

Problem build_at_level(const InstanceSource& src, const InstanceData& data,
                       double lambda) {
  switch (src.family) {
    case InstanceFamily::kLasso:
      return make_lasso({data.A, data.y, lambda, std::nullopt});
    case InstanceFamily::kLogistic:
      return make_logistic({fold_labels(data.A, data.y), lambda});
    case InstanceFamily::kElasticNet:
      return make_elastic_net(
          {data.A, data.y, lambda, src.lambda2_ratio * lambda});
  }
  throw WrongFamily("build_at_level: unknown family");
}

}  // namespace

Problem instantiate(const InstanceSource& src, double lambda_frac) {
  InstanceData data = materialize(src);
  Problem probe = build_at_level(src, data, 1.0);
  double lmax = lambda_max(probe);
  if (lmax <= 0.0) throw SolverFailed("instantiate: lambda_max is zero");
  return build_at_level(src, data, lambda_frac * lmax);
}

ExperimentReport run_ball_comparison(
    const std::vector<InstanceSource>& instances,
    const ComparisonConfig& config) {
  ExperimentReport report;

  for (const InstanceSource& src : instances) {
    for (double frac : config.lambda_fracs) {
      Problem p = instantiate(src, frac);
      ReferenceSolution ref = reference_solve(p, config.reference_gap);

      for (const std::string& strategy : config.pair_strategies) {
        PrimalDualPair pair;
        if (strategy == "zero") {
          pair = dual_scaling(p, Eigen::VectorXd::Zero(p.n()));
        } else if (strategy == "iterate") {
          SolveOptions o;
          o.gap_tolerance = config.iterate_gap;
          o.max_iters = 5000;
          SolveResult r = prox_grad_solve(p, o);
          pair = dual_scaling(p, r.x_final);
        } else if (strategy == "sequential") {
          pair = sequential_pair(p, config.sequential_lambda0_factor * p.lambda,
                                 config.pair_tol);
        } else {
          throw std::invalid_argument("unknown pair strategy: " + strategy);
        }

        std::vector<Ball> balls;
        auto t0 = Clock::now();
        balls.push_back(ryu_ball(p, pair.x, pair.u));
        double t_ryu = ms_since(t0);
        t0 = Clock::now();
        balls.push_back(gap_ball(p, pair.x, pair.u));
        balls.push_back(xgap_ball(p, pair.x, pair.u));

        if (p.family == Family::kLeastSquaresL1 ||
            p.family == Family::kLeastSquaresNorm) {
          balls.push_back(dynamic_edpp_ball(p, pair.x, pair.u));
        }
        if (p.family == Family::kLeastSquaresL1) {
          balls.push_back(sasvi_ball(p, pair.u));
          balls.push_back(safe_ball(p, pair.u));
          if (pair.linked) balls.push_back(fne_ball(p, pair.x, pair.u));
          if (pair.gamma) balls.push_back(edpp_ball(p, pair));
        }
        if (p.family == Family::kLogisticL1 && pair.gamma && pair.linked) {
          balls.push_back(slores_ball(p, pair, *pair.gamma));
          balls.push_back(sfer_ball(p, pair, *pair.gamma));
        }

        std::map<std::string, const Ball*> by_tag;
        for (const Ball& b : balls) {
          if (!contains(b, ref.u)) {
            char diag[256];
            std::snprintf(diag, sizeof diag,
                          "safeness violated: ball=%s radius=%.17g "
                          "dist=%.17g gap=%.17g",
                          b.tag.c_str(),
                          b.radius, (ref.u - b.center).norm(),
                          duality_gap(p, pair.x, pair.u).value());
            throw std::runtime_error(std::string(src.name) + ": " + diag);
          }
          by_tag[b.tag] = &b;

          BallRecord rec;
          rec.instance = src.name;
          rec.lambda_frac = frac;
          rec.pair_strategy = strategy;
          rec.ball = b.tag;
          rec.radius = b.radius;
          rec.center_norm = b.center.norm();
          rec.contains_ustar = true;
          rec.screened = p.g.l1_level ? screen_l1(p, b).screened_count() : 0;
          rec.time_ms = config.record_timings && b.tag == "ryu" ? t_ryu : 0.0;
          report.records.push_back(std::move(rec));
        }

        auto add_inclusion = [&](const char* inner, const char* outer,
                                 const Ball& a, const Ball& b) {
          report.inclusions.push_back(InclusionRecord{
              src.name, frac, strategy, inner, outer, is_subset(a, b)});
        };
        add_inclusion("ryu", "gap", *by_tag["ryu"], *by_tag["gap"]);
        add_inclusion("ryu", "xgap", *by_tag["ryu"], *by_tag["xgap"]);
        if (p.family == Family::kLeastSquaresL1) {
          Ball ryu0 = ryu_ball(p, Eigen::VectorXd::Zero(p.n()), pair.u);
          add_inclusion("ryu0", "safe", ryu0, *by_tag["safe"]);
        }
        if (by_tag.count("sfer") && by_tag.count("slores"))
          add_inclusion("sfer", "slores", *by_tag["sfer"], *by_tag["slores"]);
      }
    }
  }
  return report;
}

ExperimentReport run_dynamic_screening(
    const std::vector<InstanceSource>& instances,
    const DynamicScreeningConfig& config) {
  ExperimentReport report;
  for (const InstanceSource& src : instances) {
    for (double frac : config.lambda_fracs) {
      Problem p = instantiate(src, frac);
      for (const std::string& ball : {std::string("none"), std::string("gap"),
                                      std::string("ryu")}) {
        SolveOptions opts;
        opts.gap_tolerance = config.gap_tolerance;
        opts.max_iters = config.max_iters;
        if (ball != "none") {
          opts.screening.enabled = true;
          opts.screening.ball = ball;
          opts.screening.period = config.period;
        }
        auto t0 = Clock::now();
        SolveResult r = prox_grad_solve(p, opts);
        double elapsed = ms_since(t0);

        DynamicRunRecord rec;
        rec.instance = src.name;
        rec.lambda_frac = frac;
        rec.ball = ball;
        rec.iterations = r.iterations;
        rec.final_screened =
            r.screening_trace.empty() ? 0 : r.screening_trace.back();
        rec.time_ms = config.record_timings ? elapsed : 0.0;
        rec.screening_trace = r.screening_trace;
        rec.gap_trace = r.gap_trace;
        report.dynamic_runs.push_back(std::move(rec));
      }
    }
  }
  return report;
}

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json record_json(const BallRecord& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["lambda_frac"] = fmt17(r.lambda_frac);
  j["pair_strategy"] = r.pair_strategy;
  j["ball"] = r.ball;
  j["radius"] = fmt17(r.radius);
  j["center_norm"] = fmt17(r.center_norm);
  j["contains_ustar"] = r.contains_ustar;
  j["screened"] = r.screened;
  j["time_ms"] = fmt17(r.time_ms);
  return j;
}

}  // namespace

void emit_report(const ExperimentReport& report, const std::string& format,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);

  if (format == "csv") {
    out << "instance,lambda_frac,pair_strategy,ball,radius,contains_ustar,"
           "screened,time_ms\n";
    for (const BallRecord& r : report.records) {
      out << r.instance << "," << fmt17(r.lambda_frac) << ","
          << r.pair_strategy << "," << r.ball << "," << fmt17(r.radius) << ","
          << (r.contains_ustar ? 1 : 0) << "," << r.screened << ","
          << fmt17(r.time_ms) << "\n";
    }
    for (const DynamicRunRecord& r : report.dynamic_runs) {
      out << r.instance << "," << fmt17(r.lambda_frac) << ",dynamic,"
          << r.ball << ",0,1," << r.final_screened << "," << fmt17(r.time_ms)
          << "\n";
    }
    return;
  }
  if (format != "json")
    throw std::invalid_argument("emit_report: unknown format " + format);

  nlohmann::json j;
  j["records"] = nlohmann::json::array();
  for (const BallRecord& r : report.records)
    j["records"].push_back(record_json(r));
  j["inclusions"] = nlohmann::json::array();
  for (const InclusionRecord& r : report.inclusions) {
    nlohmann::json e;
    e["instance"] = r.instance;
    e["lambda_frac"] = fmt17(r.lambda_frac);
    e["pair_strategy"] = r.pair_strategy;
    e["inner"] = r.inner;
    e["outer"] = r.outer;
    e["holds"] = r.holds;
    j["inclusions"].push_back(e);
  }
  j["dynamic"] = nlohmann::json::array();
  for (const DynamicRunRecord& r : report.dynamic_runs) {
    nlohmann::json e;
    e["instance"] = r.instance;
    e["lambda_frac"] = fmt17(r.lambda_frac);
    e["ball"] = r.ball;
    e["iterations"] = r.iterations;
    e["final_screened"] = r.final_screened;
    e["time_ms"] = fmt17(r.time_ms);
    e["screening_trace"] = r.screening_trace;
    std::vector<std::string> gaps;
    for (double g : r.gap_trace) gaps.push_back(fmt17(g));
    e["gap_trace"] = gaps;
    j["dynamic"].push_back(e);
  }
  out << j.dump(2) << "\n";
}

}  // namespace safeball
