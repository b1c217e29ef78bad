// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SECMIMO_SWEEP_HPP
#define SECMIMO_SWEEP_HPP

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "secmimo/analytics.hpp"
#include "secmimo/config.hpp"
#include "secmimo/optimizer.hpp"

namespace secmimo {

enum class SweepParam { kAlpha, kNt, kNr, kRho, kEpsMax };

inline const char* to_string(SweepParam p) {
  switch (p) {
    case SweepParam::kAlpha:
      return "alpha";
    case SweepParam::kNt:
      return "n_t";
    case SweepParam::kNr:
      return "n_r";
    case SweepParam::kRho:
      return "rho";
    case SweepParam::kEpsMax:
      return "eps_max";
  }
  return "unknown";
}

inline SweepParam sweep_param_from_string(std::string_view name) {
  if (name == "alpha") return SweepParam::kAlpha;
  if (name == "n_t" || name == "nt") return SweepParam::kNt;
  if (name == "n_r" || name == "nr") return SweepParam::kNr;
  if (name == "rho") return SweepParam::kRho;
  if (name == "eps_max" || name == "eps-max") return SweepParam::kEpsMax;
  throw ValidationError("unknown sweep parameter: " + std::string(name));
}

inline SystemConfig with_param(SystemConfig cfg, SweepParam param,
                               double value) {
  switch (param) {
    case SweepParam::kAlpha:
      cfg.alpha = value;
      break;
    case SweepParam::kRho:
      cfg.rho = value;
      break;
    case SweepParam::kEpsMax:
      cfg.eps_max = value;
      break;
    case SweepParam::kNt:
    case SweepParam::kNr: {
      if (!(value >= 1.0) || value != std::floor(value) || value > 1e9)
        throw ValidationError(std::string(to_string(param)) +
                              " sweep values must be positive integers");
      if (param == SweepParam::kNt)
        cfg.n_t = static_cast<int>(value);
      else
        cfg.n_r = static_cast<int>(value);
      break;
    }
  }
  return cfg;
}

/// One row of a parameter sweep. ee_fixed_bpj is the fixed-power baseline
/// that always transmits at P_max, with the clamped-rate convention so an
/// infeasible point contributes zero rather than a negative efficiency.
struct SweepRow {
  SweepParam param = SweepParam::kAlpha;
  double value = 0.0;
  double ee_proposed_bpj = 0.0;
  double ee_fixed_bpj = 0.0;
  std::optional<double> p_star_watt;
  SolveStatus status = SolveStatus::kInfeasible;
};

/// Solves one scenario per value, in input order. Infeasible points are
/// recorded as rows with zero proposed efficiency, never raised.
inline std::vector<SweepRow> sweep(const SystemConfig& cfg, SweepParam param,
                                   const std::vector<double>& values,
                                   const SolverSettings& settings = {}) {
  if (values.empty()) throw ValidationError("sweep requires at least one value");
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (const double v : values) {
    const SystemConfig point = validate(with_param(cfg, param, v));
    SweepRow row;
    row.param = param;
    row.value = v;
    row.ee_fixed_bpj = energy_efficiency(point.p_max_watt, point).ee_bpj;
    const PowerAllocationResult res = dinkelbach_solve(point, settings);
    row.status = res.status;
    if (res.status == SolveStatus::kOptimal) {
      row.ee_proposed_bpj = res.q_star_bpj;
      row.p_star_watt = res.p_star_watt;
    }
    rows.push_back(row);
  }
  return rows;
}

/// A registered sweep configuration. The registry pins the parameters the
/// narrative scenarios hold fixed; sweep grids bracket the qualitative
/// behavior of each metric (alpha from 0.6 to 1.4 in 0.1 steps unless the
/// swept parameter is something else).
struct FigurePreset {
  std::string name;
  SystemConfig cfg;
  SweepParam param = SweepParam::kAlpha;
  std::vector<double> values;
};

inline FigurePreset figure_preset(const std::string& name) {
  FigurePreset preset;
  preset.name = name;
  SystemConfig cfg;  // defaults: N_t=20, N_r=2, W=1 MHz, R_min=1.5 Mb/s,
                     // P0=0.5 W, P_max=10 W, rho=0.8, eps_max=0.05
  auto alpha_grid = [] {
    std::vector<double> v;
    for (int i = 6; i <= 14; ++i) v.push_back(i / 10.0);
    return v;
  };
  if (name == "fig2") {
    // Proposed vs fixed power allocation across eavesdropper path loss.
    preset.cfg = cfg;
    preset.param = SweepParam::kAlpha;
    preset.values = alpha_grid();
  } else if (name == "fig3") {
    // Stringent outage requirement: eps_max = 0.01.
    cfg.eps_max = 0.01;
    preset.cfg = cfg;
    preset.param = SweepParam::kAlpha;
    preset.values = alpha_grid();
  } else if (name == "fig4") {
    // Antenna scaling rescues the stringent scenario; pinned at alpha = 1.4.
    cfg.eps_max = 0.01;
    cfg.alpha = 1.4;
    preset.cfg = cfg;
    preset.param = SweepParam::kNt;
    preset.values = {20, 30, 40, 64, 100, 150, 200};
  } else if (name == "fig5") {
    // CSI quality at eps_max = 0.01, N_t = 40, alpha = 1.
    cfg.eps_max = 0.01;
    cfg.n_t = 40;
    preset.cfg = cfg;
    preset.param = SweepParam::kRho;
    preset.values = {0.8, 0.9, 0.95, 1.0};
  } else if (name == "fig6") {
    // Eavesdropper antenna count at alpha = 1.4.
    cfg.alpha = 1.4;
    preset.cfg = cfg;
    preset.param = SweepParam::kNr;
    preset.values = {2, 3, 4};
  } else {
    throw ValidationError("unknown figure preset: " + name);
  }
  return preset;
}

namespace detail {

inline void append_double(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, res.ptr);
}

}  // namespace detail

inline constexpr const char* kSweepCsvHeader =
    "param,value,ee_proposed,ee_fixed,p_star,status";

/// CSV serialization: header row then one row per sweep point, fixed column
/// order. p_star is empty on infeasible rows.
inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  for (const SweepRow& row : rows) {
    std::string line = to_string(row.param);
    line += ',';
    detail::append_double(line, row.value);
    line += ',';
    detail::append_double(line, row.ee_proposed_bpj);
    line += ',';
    detail::append_double(line, row.ee_fixed_bpj);
    line += ',';
    if (row.p_star_watt) detail::append_double(line, *row.p_star_watt);
    line += ',';
    line += to_string(row.status);
    os << line << '\n';
  }
}

}  // namespace secmimo

#endif  // SECMIMO_SWEEP_HPP
