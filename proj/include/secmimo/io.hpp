// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0
//
// JSON bindings for configs and results. Scenario files carry exactly the
// nine SystemConfig fields plus an optional "solver" object; unknown keys
// are rejected so typos fail loudly instead of silently using defaults.

#ifndef SECMIMO_IO_HPP
#define SECMIMO_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "secmimo/analytics.hpp"
#include "secmimo/channel_mc.hpp"
#include "secmimo/config.hpp"
#include "secmimo/optimizer.hpp"
#include "secmimo/sweep.hpp"

namespace secmimo {

using Json = nlohmann::ordered_json;

inline Json to_json(const SystemConfig& cfg) {
  return Json{{"n_t", cfg.n_t},
              {"n_r", cfg.n_r},
              {"bandwidth_hz", cfg.bandwidth_hz},
              {"alpha", cfg.alpha},
              {"rho", cfg.rho},
              {"eps_max", cfg.eps_max},
              {"r_min_bps", cfg.r_min_bps},
              {"p0_watt", cfg.p0_watt},
              {"p_max_watt", cfg.p_max_watt}};
}

inline Json to_json(const SolverSettings& s) {
  return Json{{"step_mu", s.step_mu},
              {"step_nu", s.step_nu},
              {"dinkelbach_tol", s.dinkelbach_tol},
              {"max_outer_iters", s.max_outer_iters},
              {"max_inner_iters", s.max_inner_iters},
              {"grid_points", s.grid_points}};
}

namespace detail {

template <typename T>
T required_number(const Json& j, const std::string& key) {
  if (!j.contains(key))
    throw ValidationError("config file: missing field \"" + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number())
    throw ValidationError("config file: field \"" + key + "\" must be numeric");
  return v.get<T>();
}

template <typename T>
void optional_number(const Json& j, const std::string& key, T& out) {
  if (!j.contains(key)) return;
  const Json& v = j.at(key);
  if (!v.is_number())
    throw ValidationError("config file: field \"" + key + "\" must be numeric");
  out = v.get<T>();
}

}  // namespace detail

struct ScenarioFile {
  SystemConfig config;
  SolverSettings solver;
  bool has_solver = false;
};

inline ScenarioFile parse_scenario(const Json& j) {
  if (!j.is_object()) throw ValidationError("config file: expected an object");
  static const std::vector<std::string> kKnown{
      "n_t",     "n_r",       "bandwidth_hz", "alpha",   "rho",
      "eps_max", "r_min_bps", "p0_watt",      "p_max_watt", "solver"};
  for (const auto& item : j.items()) {
    bool known = false;
    for (const auto& k : kKnown) known = known || k == item.key();
    if (!known)
      throw ValidationError("config file: unknown field \"" + item.key() +
                            "\"");
  }
  ScenarioFile out;
  out.config.n_t = detail::required_number<int>(j, "n_t");
  out.config.n_r = detail::required_number<int>(j, "n_r");
  out.config.bandwidth_hz = detail::required_number<double>(j, "bandwidth_hz");
  out.config.alpha = detail::required_number<double>(j, "alpha");
  out.config.rho = detail::required_number<double>(j, "rho");
  out.config.eps_max = detail::required_number<double>(j, "eps_max");
  out.config.r_min_bps = detail::required_number<double>(j, "r_min_bps");
  out.config.p0_watt = detail::required_number<double>(j, "p0_watt");
  out.config.p_max_watt = detail::required_number<double>(j, "p_max_watt");
  if (j.contains("solver")) {
    const Json& s = j.at("solver");
    if (!s.is_object())
      throw ValidationError("config file: \"solver\" must be an object");
    out.has_solver = true;
    detail::optional_number(s, "step_mu", out.solver.step_mu);
    detail::optional_number(s, "step_nu", out.solver.step_nu);
    detail::optional_number(s, "dinkelbach_tol", out.solver.dinkelbach_tol);
    detail::optional_number(s, "max_outer_iters", out.solver.max_outer_iters);
    detail::optional_number(s, "max_inner_iters", out.solver.max_inner_iters);
    detail::optional_number(s, "grid_points", out.solver.grid_points);
  }
  return out;
}

inline ScenarioFile load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ValidationError("config file " + path + ": " + e.what());
  }
  return parse_scenario(j);
}

inline Json to_json(const SecrecyPoint& pt) {
  return Json{{"p_watt", pt.p_watt},
              {"r_sec_bps", pt.r_sec_bps},
              {"r_sec_clamped_bps", pt.r_sec_clamped_bps},
              {"ee_bpj", pt.ee_bpj},
              {"p_positive", pt.p_positive}};
}

inline Json to_json(const PowerAllocationResult& res) {
  Json j{{"status", to_string(res.status)}};
  if (res.status == SolveStatus::kOptimal) {
    j["p_star_watt"] = res.p_star_watt;
    j["q_star_bpj"] = res.q_star_bpj;
    j["r_sec_bps"] = res.r_sec_bps;
  } else {
    j["infeasibility_reason"] = to_string(res.infeasibility_reason);
  }
  j["saturation_bps"] = res.saturation_bps;
  j["outer_iters"] = res.outer_iters;
  Json trace = Json::array();
  for (const DinkelbachStep& step : res.trace) {
    trace.push_back(Json{{"q_bpj", step.q_bpj}, {"p_watt", step.p_watt}});
  }
  j["trace"] = trace;
  return j;
}

inline Json to_json(const mc::McEstimate& est) {
  return Json{{"value", est.value},
              {"stderr", est.stderr_value},
              {"n_samples", est.n_samples},
              {"seed", est.seed}};
}

inline Json to_json(const SweepRow& row) {
  Json j{{"param", to_string(row.param)},
         {"value", row.value},
         {"ee_proposed_bpj", row.ee_proposed_bpj},
         {"ee_fixed_bpj", row.ee_fixed_bpj}};
  if (row.p_star_watt)
    j["p_star_watt"] = *row.p_star_watt;
  else
    j["p_star_watt"] = nullptr;
  j["status"] = to_string(row.status);
  return j;
}

inline Json to_json(const std::vector<SweepRow>& rows) {
  Json arr = Json::array();
  for (const SweepRow& row : rows) arr.push_back(to_json(row));
  return arr;
}

}  // namespace secmimo

#endif  // SECMIMO_IO_HPP
