#pragma once

#include <json.hpp>

#include "safeball/ball.hpp"
#include "safeball/screening.hpp"
#include "safeball/solver.hpp"

namespace safeball {

inline nlohmann::json to_json(const Ball& b) {
  nlohmann::json j;
  j["tag"] = b.tag;
  j["center"] = std::vector<double>(b.center.begin(), b.center.end());
  j["radius"] = b.radius;
  return j;
}

inline nlohmann::json to_json(const ScreenMask& m) {
  nlohmann::json j;
  j["ball_tag"] = m.ball_tag;
  std::vector<Eigen::Index> screened;
  for (Eigen::Index k = 0; k < m.size(); ++k)
    if (m.flags[k]) screened.push_back(k);
  j["screened_indices"] = screened;
  j["n"] = m.size();
  return j;
}

inline nlohmann::json to_json(const SolveResult& r) {
  nlohmann::json j;
  j["x_final"] = std::vector<double>(r.x_final.begin(), r.x_final.end());
  j["u_final"] = std::vector<double>(r.u_final.begin(), r.u_final.end());
  j["gap_trace"] = r.gap_trace;
  j["screening_trace"] = r.screening_trace;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  return j;
}

}  // namespace safeball
