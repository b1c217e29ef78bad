// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef SECMIMO_CONFIG_HPP
#define SECMIMO_CONFIG_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace secmimo {

/// Thrown when a scenario or solver parameter is outside its domain. The
/// message names the offending field.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scenario parameters shared by every analysis, solver and simulation entry
/// point. Treat as immutable once validated; all downstream operations take
/// it by const reference.
struct SystemConfig {
  int n_t = 20;               ///< base-station antenna count
  int n_r = 2;                ///< eavesdropper antenna count
  double bandwidth_hz = 1e6;  ///< spectrum bandwidth W
  double alpha = 1.0;         ///< relative eavesdropper path-loss amplitude
  double rho = 0.8;           ///< correlation of true vs estimated channel, in (0,1]
  double eps_max = 0.05;      ///< tolerated secrecy outage probability, in (0,1)
  double r_min_bps = 1.5e6;   ///< QoS rate floor
  double p0_watt = 0.5;       ///< constant circuit power
  double p_max_watt = 10.0;   ///< transmit power cap
};

/// Iteration controls for the power-allocation solver and the grid oracle.
///
/// step_mu / step_nu are dimensionless gains on the internally
/// curvature-scaled dual-ascent steps, so the defaults work across scenarios
/// without per-case tuning. dinkelbach_tol is relative to the bandwidth: the
/// outer loop stops once the Dinkelbach gap drops below
/// dinkelbach_tol * bandwidth_hz.
struct SolverSettings {
  double step_mu = 1.0;
  double step_nu = 1.0;
  double dinkelbach_tol = 1e-9;
  int max_outer_iters = 100;
  int max_inner_iters = 10000;
  int grid_points = 100000;
};

/// Returns cfg unchanged iff every field is inside its domain; otherwise
/// throws ValidationError. Idempotent.
inline const SystemConfig& validate(const SystemConfig& cfg) {
  if (cfg.n_t < 1) throw ValidationError("n_t must be >= 1");
  if (cfg.n_r < 1) throw ValidationError("n_r must be >= 1");
  if (!(cfg.bandwidth_hz > 0.0) || !std::isfinite(cfg.bandwidth_hz))
    throw ValidationError("bandwidth_hz must be positive");
  if (!(cfg.alpha > 0.0) || !std::isfinite(cfg.alpha))
    throw ValidationError("alpha must be positive");
  if (!(cfg.rho > 0.0) || !(cfg.rho <= 1.0))
    throw ValidationError("rho must be in (0,1]");
  if (!(cfg.eps_max > 0.0) || !(cfg.eps_max < 1.0))
    throw ValidationError("eps_max must be in (0,1)");
  if (!(cfg.r_min_bps >= 0.0) || !std::isfinite(cfg.r_min_bps))
    throw ValidationError("r_min_bps must be nonnegative");
  if (!(cfg.p0_watt >= 0.0) || !std::isfinite(cfg.p0_watt))
    throw ValidationError("p0_watt must be nonnegative");
  if (!(cfg.p_max_watt > 0.0) || !std::isfinite(cfg.p_max_watt))
    throw ValidationError("p_max_watt must be positive");
  return cfg;
}

inline const SolverSettings& validate(const SolverSettings& s) {
  if (!(s.step_mu > 0.0)) throw ValidationError("step_mu must be positive");
  if (!(s.step_nu > 0.0)) throw ValidationError("step_nu must be positive");
  if (!(s.dinkelbach_tol > 0.0))
    throw ValidationError("dinkelbach_tol must be positive");
  if (s.max_outer_iters < 1)
    throw ValidationError("max_outer_iters must be positive");
  if (s.max_inner_iters < 1)
    throw ValidationError("max_inner_iters must be positive");
  if (s.grid_points < 100) throw ValidationError("grid_points must be >= 100");
  return s;
}

}  // namespace secmimo

#endif  // SECMIMO_CONFIG_HPP
