// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form secrecy metrics for a large-scale MIMO downlink with an
// antenna-selection eavesdropper and imperfect transmitter CSI. The
// legitimate capacity enters through its large-array asymptote
// W log2(rho P N_t); the eavesdropper SNR is the maximum of N_r i.i.d.
// exponentials with mean P alpha^2.

#ifndef SECMIMO_ANALYTICS_HPP
#define SECMIMO_ANALYTICS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "secmimo/config.hpp"

namespace secmimo {

inline constexpr double kLn2 = 0.6931471805599453094;

/// Quantile coefficient of the eavesdropper SNR: the negative constant
/// c = alpha^2 * ln(1 - (1-eps)^(1/N_r)) such that the (1-eps)-quantile of
/// gamma_e equals -c * P. It is the single scenario constant threading the
/// outage, capacity, minimum-power and stationarity expressions.
inline double eve_quantile_coeff(double alpha, double eps, int n_r) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw ValidationError("eps must be in (0,1)");
  if (n_r < 1) throw ValidationError("n_r must be >= 1");
  // (1-eps)^(1/n_r) and its complement, both free of cancellation at the
  // eps -> 0 and eps -> 1 ends.
  const double complement = -std::expm1(std::log1p(-eps) / n_r);
  return alpha * alpha * std::log(complement);
}

inline double eve_quantile_coeff(const SystemConfig& cfg, double eps) {
  return eve_quantile_coeff(cfg.alpha, eps, cfg.n_r);
}

/// CDF of the eavesdropper SNR gamma_e = max_i P alpha^2 |g_i w|^2, the
/// order-statistic law (1 - exp(-x / (P alpha^2)))^(N_r).
inline double eavesdropper_gain_cdf(double x, double p_watt, double alpha,
                                    int n_r) {
  if (x < 0.0) throw std::domain_error("eavesdropper_gain_cdf: x must be >= 0");
  if (!(p_watt > 0.0))
    throw std::domain_error("eavesdropper_gain_cdf: p_watt must be positive");
  const double base = -std::expm1(-x / (p_watt * alpha * alpha));
  return std::pow(base, n_r);
}

/// Secrecy outage capacity at transmit power P and outage target eps,
/// -W log2((1 - P c) / (rho P N_t)) with c the quantile coefficient.
/// May be negative at small rho P N_t; strictly increasing in P, N_t, rho
/// and eps, strictly decreasing in alpha and N_r.
inline double secrecy_outage_capacity(double p_watt, double eps,
                                      const SystemConfig& cfg) {
  if (!(p_watt > 0.0))
    throw std::domain_error("secrecy_outage_capacity: p_watt must be positive");
  const double c = eve_quantile_coeff(cfg, eps);
  return -cfg.bandwidth_hz *
         std::log2((1.0 - p_watt * c) / (cfg.rho * p_watt * cfg.n_t));
}

/// Probability that the instantaneous secrecy rate falls below r_sec_bps.
/// The threshold rho P N_t 2^(-R/W) - 1 may be negative, in which case the
/// outage is certain.
inline double secrecy_outage_probability(double r_sec_bps, double p_watt,
                                         const SystemConfig& cfg) {
  if (!(p_watt > 0.0))
    throw std::domain_error(
        "secrecy_outage_probability: p_watt must be positive");
  const double threshold =
      cfg.rho * p_watt * cfg.n_t * std::exp2(-r_sec_bps / cfg.bandwidth_hz) -
      1.0;
  if (threshold < 0.0) return 1.0;
  return 1.0 - eavesdropper_gain_cdf(threshold, p_watt, cfg.alpha, cfg.n_r);
}

/// Probability of a strictly positive secrecy rate, clamped to 0 when
/// rho P N_t < 1 (the asymptotic legitimate capacity is then nonpositive).
inline double positive_secrecy_probability(double p_watt,
                                           const SystemConfig& cfg) {
  if (!(p_watt > 0.0))
    throw std::domain_error(
        "positive_secrecy_probability: p_watt must be positive");
  const double threshold = cfg.rho * p_watt * cfg.n_t - 1.0;
  if (threshold < 0.0) return 0.0;
  return eavesdropper_gain_cdf(threshold, p_watt, cfg.alpha, cfg.n_r);
}

/// Large-array limit of the legitimate channel capacity, W log2(rho P N_t).
inline double asymptotic_legitimate_capacity(double p_watt, double rho,
                                             int n_t, double bandwidth_hz) {
  const double arg = rho * p_watt * n_t;
  if (!(arg > 0.0))
    throw std::domain_error(
        "asymptotic_legitimate_capacity: rho * P * n_t must be positive");
  return bandwidth_hz * std::log2(arg);
}

/// Supremum of the secrecy outage capacity over all transmit powers,
/// W log2(rho N_t / |c|). Finite-power capacities stay strictly below it and
/// approach it monotonically, so it is the fast feasibility screen for the
/// QoS floor.
inline double saturation_capacity_bps(const SystemConfig& cfg) {
  const double c = eve_quantile_coeff(cfg, cfg.eps_max);
  return cfg.bandwidth_hz * std::log2(cfg.rho * cfg.n_t / -c);
}

enum class Feasibility {
  kOk,
  kSaturationBelowRmin,  ///< no finite power reaches r_min_bps
  kPminExceedsPmax       ///< the QoS floor needs more power than the cap
};

inline const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::kOk:
      return "ok";
    case Feasibility::kSaturationBelowRmin:
      return "saturation_below_rmin";
    case Feasibility::kPminExceedsPmax:
      return "pmin_exceeds_pmax";
  }
  return "unknown";
}

struct MinPowerResult {
  Feasibility status = Feasibility::kOk;
  double p_min_watt = 0.0;     ///< valid iff status == kOk
  double saturation_bps = 0.0; ///< always populated, for reporting
  bool ok() const { return status == Feasibility::kOk; }
};

/// Smallest power meeting the QoS floor at the outage target eps_max,
/// P_min = 1 / (c + rho N_t 2^(-R_min/W)). The denominator is positive
/// exactly when R_min lies below the saturation capacity.
inline MinPowerResult min_power_for_qos(const SystemConfig& cfg) {
  validate(cfg);
  MinPowerResult out;
  out.saturation_bps = saturation_capacity_bps(cfg);
  const double c = eve_quantile_coeff(cfg, cfg.eps_max);
  const double denom =
      c + cfg.rho * cfg.n_t * std::exp2(-cfg.r_min_bps / cfg.bandwidth_hz);
  if (!(denom > 0.0)) {
    out.status = Feasibility::kSaturationBelowRmin;
    return out;
  }
  out.p_min_watt = 1.0 / denom;
  if (out.p_min_watt > cfg.p_max_watt) {
    out.status = Feasibility::kPminExceedsPmax;
  }
  return out;
}

/// One evaluated operating point: raw and clamped secrecy outage capacity at
/// eps_max, the resulting secrecy energy efficiency, and the probability of
/// positive secrecy.
struct SecrecyPoint {
  double p_watt = 0.0;
  double r_sec_bps = 0.0;
  double r_sec_clamped_bps = 0.0;
  double ee_bpj = 0.0;
  double p_positive = 0.0;
};

inline SecrecyPoint energy_efficiency(double p_watt, const SystemConfig& cfg) {
  SecrecyPoint pt;
  pt.p_watt = p_watt;
  pt.r_sec_bps = secrecy_outage_capacity(p_watt, cfg.eps_max, cfg);
  pt.r_sec_clamped_bps = std::max(pt.r_sec_bps, 0.0);
  pt.ee_bpj = pt.r_sec_clamped_bps / (cfg.p0_watt + p_watt);
  pt.p_positive = positive_secrecy_probability(p_watt, cfg);
  return pt;
}

}  // namespace secmimo

#endif  // SECMIMO_ANALYTICS_HPP
