// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0
//
// Energy-efficient power allocation: maximize R_sec(P) / (P0 + P) subject to
// the QoS floor R_sec >= R_min and the power cap P <= P_max. The fractional
// objective is solved by Dinkelbach iteration; each parametric subproblem
// min -R_sec(P) + q (P0 + P) over [P_min, P_max] is convex and is solved
// either by projected dual ascent on the box multipliers (mu for the lower
// bound, nu for the upper) or directly by clipping the stationary point.

#ifndef SECMIMO_OPTIMIZER_HPP
#define SECMIMO_OPTIMIZER_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secmimo/analytics.hpp"
#include "secmimo/config.hpp"

namespace secmimo {

enum class SolveStatus { kOptimal, kInfeasible };

inline const char* to_string(SolveStatus s) {
  return s == SolveStatus::kOptimal ? "optimal" : "infeasible";
}

struct DinkelbachStep {
  double q_bpj = 0.0;   ///< ratio parameter entering the iteration
  double p_watt = 0.0;  ///< inner minimizer at that parameter
};

struct PowerAllocationResult {
  SolveStatus status = SolveStatus::kInfeasible;
  double p_star_watt = 0.0;
  double q_star_bpj = 0.0;
  double r_sec_bps = 0.0;
  int outer_iters = 0;
  std::vector<DinkelbachStep> trace;
  Feasibility infeasibility_reason = Feasibility::kOk;
  double saturation_bps = 0.0;
};

/// Raised when an iteration cap is hit before the convergence test; carries
/// the trace so a mis-set tolerance can be diagnosed instead of silently
/// returning a wrong answer.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<DinkelbachStep> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::vector<DinkelbachStep>& trace() const { return trace_; }

 private:
  std::vector<DinkelbachStep> trace_;
};

/// dR_sec/dP = W / (ln2 * P (1 - P c)); positive for every P > 0, so the
/// secrecy outage capacity is strictly increasing in power.
inline double secrecy_rate_slope(double p_watt, const SystemConfig& cfg) {
  const double c = eve_quantile_coeff(cfg, cfg.eps_max);
  return cfg.bandwidth_hz / (kLn2 * p_watt * (1.0 - p_watt * c));
}

/// d2R_sec/dP2 = -W (1 - 2 P c) / (ln2 * (P - c P^2)^2); negative, so R_sec
/// is strictly concave. Its magnitude is the natural scale for dual steps.
inline double secrecy_rate_curvature(double p_watt, const SystemConfig& cfg) {
  const double c = eve_quantile_coeff(cfg, cfg.eps_max);
  const double denom = p_watt * (1.0 - p_watt * c);
  return -cfg.bandwidth_hz * (1.0 - 2.0 * p_watt * c) / (kLn2 * denom * denom);
}

/// Lagrangian of the parametric subproblem:
///   -R_sec(P) + q (P0 + P) + mu (P_min - P) + nu (P - P_max).
inline double inner_lagrangian(double p_watt, double q, double mu, double nu,
                               const SystemConfig& cfg, double p_min,
                               double p_max) {
  return -secrecy_outage_capacity(p_watt, cfg.eps_max, cfg) +
         q * (cfg.p0_watt + p_watt) + mu * (p_min - p_watt) +
         nu * (p_watt - p_max);
}

/// Positive stationary points of the Lagrangian. Setting its derivative to
/// zero gives R_sec'(P) = q - mu + nu, i.e. the quadratic
///   c P^2 - P + W / (ln2 (q - mu + nu)) = 0
/// with c the (negative) quantile coefficient. Returns an empty set when
/// q - mu + nu <= 0 (the penalized objective decreases for all P, no
/// stationary point) or the discriminant is negative; callers fall back to
/// boundary evaluation.
inline std::vector<double> solve_kkt_stationarity(double q, double mu,
                                                  double nu,
                                                  const SystemConfig& cfg) {
  std::vector<double> roots;
  const double d = q - mu + nu;
  if (!(d > 0.0)) return roots;
  const double c = eve_quantile_coeff(cfg, cfg.eps_max);
  const double k = cfg.bandwidth_hz / (kLn2 * d);
  const double disc = 1.0 - 4.0 * c * k;
  if (disc < 0.0) return roots;
  const double s = std::sqrt(disc);
  for (const double r : {(1.0 - s) / (2.0 * c), (1.0 + s) / (2.0 * c)}) {
    if (r > 0.0 && std::isfinite(r)) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

/// Projected subgradient ascent step on the dual variables:
///   mu' = [mu + step_mu (P_min - P)]+ ,  nu' = [nu + step_nu (P - P_max)]+ .
/// A violated bound raises its multiplier; a satisfied one decays toward 0.
struct DualPair {
  double mu = 0.0;
  double nu = 0.0;
};

inline DualPair dual_update(double mu, double nu, double p_watt,
                            const SolverSettings& settings, double p_min,
                            double p_max) {
  return {std::max(0.0, mu + settings.step_mu * (p_min - p_watt)),
          std::max(0.0, nu + settings.step_nu * (p_watt - p_max))};
}

enum class InnerMethod { kDualAscent, kDirect };

namespace detail {

inline double clamp_to_box(double p, double p_min, double p_max) {
  return std::clamp(p, p_min, p_max);
}

/// Inner subproblem objective -R_sec(P) + q (P0 + P).
inline double inner_objective(double p, double q, const SystemConfig& cfg) {
  return -secrecy_outage_capacity(p, cfg.eps_max, cfg) +
         q * (cfg.p0_watt + p);
}

/// Direct route: clip the stationary point into the box; when the candidate
/// set is ambiguous, pick the objective minimizer among roots and endpoints.
inline double inner_minimize_direct(double q, const SystemConfig& cfg,
                                    double p_min, double p_max) {
  std::vector<double> candidates{p_min, p_max};
  for (const double r : solve_kkt_stationarity(q, 0.0, 0.0, cfg)) {
    candidates.push_back(clamp_to_box(r, p_min, p_max));
  }
  double best = candidates.front();
  double best_val = inner_objective(best, q, cfg);
  for (const double p : candidates) {
    const double v = inner_objective(p, q, cfg);
    if (v < best_val) {
      best_val = v;
      best = p;
    }
  }
  return best;
}

/// Dual-ascent route. The multipliers move by diminishing steps scaled with
/// the dual curvature |R_sec''| at the current iterate, which keeps the
/// update well conditioned across bandwidth and power scales; step_mu and
/// step_nu act as dimensionless gains on that scale. Stops when successive
/// unconstrained minimizers differ by less than 1e-9 W.
inline double inner_minimize_dual(double q, const SystemConfig& cfg,
                                  const SolverSettings& settings, double p_min,
                                  double p_max) {
  constexpr double kInnerTolWatt = 1e-9;
  double mu = 0.0;
  double nu = 0.0;
  double p = p_max;
  double p_prev = std::numeric_limits<double>::quiet_NaN();
  for (int n = 1; n <= settings.max_inner_iters; ++n) {
    const std::vector<double> roots = solve_kkt_stationarity(q, mu, nu, cfg);
    if (!roots.empty()) {
      p = roots.front();
      for (const double r : roots) {
        if (inner_lagrangian(r, q, mu, nu, cfg, p_min, p_max) <
            inner_lagrangian(p, q, mu, nu, cfg, p_min, p_max)) {
          p = r;
        }
      }
    } else {
      // No stationary point: the Lagrangian is monotone, evaluate the box ends.
      p = inner_lagrangian(p_min, q, mu, nu, cfg, p_min, p_max) <=
                  inner_lagrangian(p_max, q, mu, nu, cfg, p_min, p_max)
              ? p_min
              : p_max;
    }
    if (std::isfinite(p_prev) && std::abs(p - p_prev) < kInnerTolWatt) break;
    p_prev = p;
    const double scale =
        -secrecy_rate_curvature(clamp_to_box(p, p_min, p_max), cfg) /
        std::sqrt(static_cast<double>(n));
    SolverSettings scaled = settings;
    scaled.step_mu = settings.step_mu * scale;
    scaled.step_nu = settings.step_nu * scale;
    const DualPair next = dual_update(mu, nu, p, scaled, p_min, p_max);
    mu = next.mu;
    nu = next.nu;
  }
  return clamp_to_box(p, p_min, p_max);
}

inline double inner_minimize_boxed(double q, const SystemConfig& cfg,
                                   const SolverSettings& settings,
                                   double p_min, double p_max,
                                   InnerMethod method) {
  return method == InnerMethod::kDirect
             ? inner_minimize_direct(q, cfg, p_min, p_max)
             : inner_minimize_dual(q, cfg, settings, p_min, p_max);
}

}  // namespace detail

/// Minimizer of -R_sec(P) + q (P0 + P) over the feasible power box. Requires
/// a feasible scenario (see min_power_for_qos).
inline double inner_minimize(double q, const SystemConfig& cfg,
                             const SolverSettings& settings,
                             InnerMethod method = InnerMethod::kDualAscent) {
  validate(cfg);
  validate(settings);
  const MinPowerResult mp = min_power_for_qos(cfg);
  if (!mp.ok()) {
    throw std::invalid_argument(
        std::string("inner_minimize: infeasible scenario (") +
        to_string(mp.status) + ")");
  }
  return detail::inner_minimize_boxed(q, cfg, settings, mp.p_min_watt,
                                      cfg.p_max_watt, method);
}

/// Dinkelbach iteration on q = R_sec(P) / (P0 + P). Starts from P = P_min,
/// where the ratio is always defined, and stops once the parametric optimum
/// satisfies R_sec(P) - q (P0 + P) <= dinkelbach_tol * W. Infeasibility is a
/// first-class result, not an error.
inline PowerAllocationResult dinkelbach_solve(
    const SystemConfig& cfg, const SolverSettings& settings = {},
    InnerMethod method = InnerMethod::kDualAscent) {
  validate(cfg);
  validate(settings);
  PowerAllocationResult result;
  const MinPowerResult mp = min_power_for_qos(cfg);
  result.saturation_bps = mp.saturation_bps;
  if (!mp.ok()) {
    result.status = SolveStatus::kInfeasible;
    result.infeasibility_reason = mp.status;
    return result;
  }
  const double p_min = mp.p_min_watt;
  const double p_max = cfg.p_max_watt;
  const double gap_tol = settings.dinkelbach_tol * cfg.bandwidth_hz;
  double q = energy_efficiency(p_min, cfg).ee_bpj;
  for (int iter = 1; iter <= settings.max_outer_iters; ++iter) {
    const double p =
        detail::inner_minimize_boxed(q, cfg, settings, p_min, p_max, method);
    const double r = secrecy_outage_capacity(p, cfg.eps_max, cfg);
    result.trace.push_back({q, p});
    const double gap = r - q * (cfg.p0_watt + p);
    if (gap <= gap_tol) {
      result.status = SolveStatus::kOptimal;
      result.p_star_watt = p;
      result.r_sec_bps = r;
      result.q_star_bpj = r / (cfg.p0_watt + p);
      result.outer_iters = iter;
      return result;
    }
    q = r / (cfg.p0_watt + p);
  }
  throw ConvergenceError("dinkelbach_solve: max_outer_iters exceeded",
                         std::move(result.trace));
}

struct GridSearchResult {
  SolveStatus status = SolveStatus::kInfeasible;
  double p_star_watt = 0.0;
  double ee_star_bpj = 0.0;
  Feasibility infeasibility_reason = Feasibility::kOk;
};

/// Exhaustive independent check: evaluates the secrecy energy efficiency on
/// a uniform grid over [P_min, P_max] and returns the maximizer. Used by
/// tests and the CLI --verify mode, never by the solver itself.
inline GridSearchResult grid_search_oracle(const SystemConfig& cfg,
                                           int grid_points) {
  validate(cfg);
  if (grid_points < 2)
    throw ValidationError("grid_points must be >= 2");
  GridSearchResult out;
  const MinPowerResult mp = min_power_for_qos(cfg);
  if (!mp.ok()) {
    out.infeasibility_reason = mp.status;
    return out;
  }
  const double p_min = mp.p_min_watt;
  const double step =
      (cfg.p_max_watt - p_min) / static_cast<double>(grid_points - 1);
  out.status = SolveStatus::kOptimal;
  out.p_star_watt = p_min;
  out.ee_star_bpj = energy_efficiency(p_min, cfg).ee_bpj;
  for (int i = 1; i < grid_points; ++i) {
    const double p =
        i + 1 == grid_points ? cfg.p_max_watt : p_min + step * i;
    const double ee = energy_efficiency(p, cfg).ee_bpj;
    if (ee > out.ee_star_bpj) {
      out.ee_star_bpj = ee;
      out.p_star_watt = p;
    }
  }
  return out;
}

}  // namespace secmimo

#endif  // SECMIMO_OPTIMIZER_HPP
