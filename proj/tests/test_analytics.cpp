// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "secmimo/analytics.hpp"
#include "support/scenarios.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace secmimo;

namespace {

// Reference values for the base scenario, evaluated with 40-digit
// arithmetic.
constexpr double kBaseQuantileCoeff = -3.6761383470778716;
constexpr double kBaseRsecAt1W = 1774682.3862787223;
constexpr double kBasePmin = 0.5048679615188589;
constexpr double kBaseSaturation = 2121808.9382459023;
constexpr double kBaseEeAt10W = 198389.36933784459;
constexpr double kBaseZeroRatePower = 0.08114339710742278;
constexpr double kStringentSaturation = 624295.54419091855;

}  // namespace

TEST_CASE("eavesdropper SNR quantile coefficient", "[analytics]") {
  REQUIRE_THAT(eve_quantile_coeff(1.0, 0.05, 2),
               WithinRel(kBaseQuantileCoeff, 1e-12));
  SECTION("negative for every outage target") {
    for (double eps : {1e-9, 0.01, 0.5, 0.99, 1.0 - 1e-9})
      for (int nr : {1, 2, 8})
        REQUIRE(eve_quantile_coeff(1.3, eps, nr) < 0.0);
  }
  SECTION("outage targets outside (0,1) are rejected") {
    REQUIRE_THROWS_AS(eve_quantile_coeff(1.0, 0.0, 2), ValidationError);
    REQUIRE_THROWS_AS(eve_quantile_coeff(1.0, 1.0, 2), ValidationError);
  }
}

TEST_CASE("eavesdropper gain CDF", "[analytics]") {
  SECTION("zero at the origin") {
    REQUIRE(eavesdropper_gain_cdf(0.0, 1.0, 1.0, 2) == 0.0);
  }
  SECTION("exponential median for one antenna") {
    const double p = 2.0, a = 1.3;
    REQUIRE_THAT(eavesdropper_gain_cdf(p * a * a * std::log(2.0), p, a, 1),
                 WithinRel(0.5, 1e-14));
  }
  SECTION("strongest of two antennas squares the single-antenna CDF") {
    const double p = 2.0, a = 1.3;
    REQUIRE_THAT(eavesdropper_gain_cdf(p * a * a * std::log(2.0), p, a, 2),
                 WithinRel(0.25, 1e-14));
  }
  SECTION("negative argument is a domain error") {
    REQUIRE_THROWS_AS(eavesdropper_gain_cdf(-1e-9, 1.0, 1.0, 2),
                      std::domain_error);
  }
  SECTION("nondecreasing and within [0,1]") {
    for (double p : {0.5, 1.0, 10.0}) {
      for (int nr : {1, 2, 4}) {
        double prev = 0.0;
        for (double x = 0.0; x <= 50.0; x += 0.25) {
          const double f = eavesdropper_gain_cdf(x, p, 1.2, nr);
          REQUIRE(f >= prev);
          REQUIRE(f >= 0.0);
          REQUIRE(f <= 1.0);
          prev = f;
        }
      }
    }
  }
}

TEST_CASE("outage probability and outage capacity are inverses", "[analytics]") {
  SystemConfig cfg = testsupport::base_scenario();
  for (double p : {0.1, 1.0, 10.0}) {
    for (double eps0 : {0.01, 0.05, 0.2}) {
      for (double alpha : {0.8, 1.0, 1.4}) {
        cfg.alpha = alpha;
        const double r = secrecy_outage_capacity(p, eps0, cfg);
        const double eps = secrecy_outage_probability(r, p, cfg);
        REQUIRE_THAT(eps, WithinRel(eps0, 1e-12));
      }
    }
  }
}

TEST_CASE("outage probability edge cases", "[analytics]") {
  const SystemConfig cfg = testsupport::base_scenario();
  const double p = 1.0;
  SECTION("rate at the asymptotic legitimate capacity is always in outage") {
    const double r = asymptotic_legitimate_capacity(p, cfg.rho, cfg.n_t,
                                                    cfg.bandwidth_hz);
    REQUIRE(secrecy_outage_probability(r, p, cfg) == 1.0);
    REQUIRE(secrecy_outage_probability(r + 1e6, p, cfg) == 1.0);
  }
  SECTION("zero-rate outage complements the positive-secrecy probability") {
    for (double pw : {0.1, 0.5, 1.0, 4.0}) {
      if (cfg.rho * pw * cfg.n_t < 1.0) continue;
      const double sum = secrecy_outage_probability(0.0, pw, cfg) +
                         positive_secrecy_probability(pw, cfg);
      REQUIRE(sum == 1.0);
    }
  }
}

TEST_CASE("secrecy outage capacity closed form", "[analytics]") {
  const SystemConfig cfg = testsupport::base_scenario();
  REQUIRE_THAT(secrecy_outage_capacity(1.0, 0.05, cfg),
               WithinRel(kBaseRsecAt1W, 1e-12));

  SECTION("relaxing the outage target toward one removes the eavesdropper") {
    const double r = secrecy_outage_capacity(1.0, 1.0 - 1e-12, cfg);
    const double asym =
        asymptotic_legitimate_capacity(1.0, cfg.rho, cfg.n_t, cfg.bandwidth_hz);
    REQUIRE_THAT(r, WithinRel(asym, 1e-5));
  }
  SECTION("monotone in every scenario direction") {
    SystemConfig c = cfg;
    double prev = secrecy_outage_capacity(0.05, c.eps_max, c);
    for (double p : {0.1, 0.5, 1.0, 5.0, 10.0}) {  // increasing in P
      const double r = secrecy_outage_capacity(p, c.eps_max, c);
      REQUIRE(r > prev);
      prev = r;
    }
    prev = -1e18;
    for (int nt : {4, 16, 64, 256}) {  // increasing in N_t
      c = cfg;
      c.n_t = nt;
      const double r = secrecy_outage_capacity(1.0, c.eps_max, c);
      REQUIRE(r > prev);
      prev = r;
    }
    prev = -1e18;
    for (double rho : {0.2, 0.5, 0.8, 1.0}) {  // increasing in rho
      c = cfg;
      c.rho = rho;
      const double r = secrecy_outage_capacity(1.0, c.eps_max, c);
      REQUIRE(r > prev);
      prev = r;
    }
    prev = -1e18;
    for (double eps : {0.01, 0.05, 0.2, 0.6}) {  // increasing in eps
      const double r = secrecy_outage_capacity(1.0, eps, cfg);
      REQUIRE(r > prev);
      prev = r;
    }
    prev = 1e18;
    for (double alpha : {0.6, 1.0, 1.4, 2.0}) {  // decreasing in alpha
      c = cfg;
      c.alpha = alpha;
      const double r = secrecy_outage_capacity(1.0, c.eps_max, c);
      REQUIRE(r < prev);
      prev = r;
    }
    prev = 1e18;
    for (int nr : {1, 2, 4, 8}) {  // decreasing in N_r
      c = cfg;
      c.n_r = nr;
      const double r = secrecy_outage_capacity(1.0, c.eps_max, c);
      REQUIRE(r < prev);
      prev = r;
    }
  }
  SECTION("outage grows with N_r and shrinks with N_t at fixed rate") {
    const double r = 0.5e6;
    double prev = 0.0;
    for (int nr : {1, 2, 4, 8}) {
      SystemConfig c = cfg;
      c.n_r = nr;
      const double eps = secrecy_outage_probability(r, 1.0, c);
      REQUIRE(eps > prev);
      prev = eps;
    }
    prev = 2.0;
    for (int nt : {10, 20, 40, 80}) {
      SystemConfig c = cfg;
      c.n_t = nt;
      const double eps = secrecy_outage_probability(r, 1.0, c);
      REQUIRE(eps < prev);
      prev = eps;
    }
  }
}

TEST_CASE("positive secrecy probability", "[analytics]") {
  const SystemConfig cfg = testsupport::base_scenario();
  SECTION("vanishes when the asymptotic legitimate SNR hits the noise floor") {
    const double p = 1.0 / (cfg.rho * cfg.n_t);  // rho P N_t = 1
    REQUIRE(positive_secrecy_probability(p, cfg) == 0.0);
    REQUIRE(positive_secrecy_probability(0.5 * p, cfg) == 0.0);
  }
  SECTION("approaches one with many antennas") {
    SystemConfig c = cfg;
    c.n_t = 1000000;
    REQUIRE(positive_secrecy_probability(1.0, c) > 1.0 - 1e-12);
  }
  SECTION("reference value") {
    REQUIRE_THAT(positive_secrecy_probability(1.0, cfg),
                 WithinRel(0.99999938819545257, 1e-12));
  }
  SECTION("monotone in N_t, alpha and N_r") {
    double prev = -1.0;
    for (int nt : {2, 4, 8, 16}) {
      SystemConfig c = cfg;
      c.n_t = nt;
      const double v = positive_secrecy_probability(0.2, c);
      REQUIRE(v >= prev);
      prev = v;
    }
    prev = 2.0;
    for (double alpha : {0.8, 1.2, 1.8, 3.0}) {
      SystemConfig c = cfg;
      c.alpha = alpha;
      c.n_t = 4;
      const double v = positive_secrecy_probability(0.5, c);
      REQUIRE(v <= prev);
      prev = v;
    }
    prev = 2.0;
    for (int nr : {1, 2, 4, 8}) {
      SystemConfig c = cfg;
      c.n_r = nr;
      c.n_t = 4;
      const double v = positive_secrecy_probability(0.5, c);
      REQUIRE(v <= prev);
      prev = v;
    }
  }
}

TEST_CASE("asymptotic legitimate capacity", "[analytics]") {
  REQUIRE(asymptotic_legitimate_capacity(1.0, 1.0, 1, 1e6) == 0.0);
  REQUIRE(asymptotic_legitimate_capacity(1.0, 1.0, 1024, 1.0) == 10.0);
  REQUIRE_THROWS_AS(asymptotic_legitimate_capacity(0.0, 1.0, 10, 1e6),
                    std::domain_error);
}

TEST_CASE("minimum power for the QoS floor", "[analytics]") {
  const SystemConfig cfg = testsupport::base_scenario();
  SECTION("closed form agrees with the bisection oracle") {
    const MinPowerResult mp = min_power_for_qos(cfg);
    REQUIRE(mp.ok());
    REQUIRE_THAT(mp.p_min_watt, WithinRel(kBasePmin, 1e-12));
    const double oracle =
        testsupport::bisect_power_for_rate(cfg, cfg.eps_max, cfg.r_min_bps);
    REQUIRE_THAT(mp.p_min_watt, WithinRel(oracle, 1e-9));
  }
  SECTION("the rate at P_min meets the floor exactly") {
    const MinPowerResult mp = min_power_for_qos(cfg);
    REQUIRE_THAT(secrecy_outage_capacity(mp.p_min_watt, cfg.eps_max, cfg),
                 WithinRel(cfg.r_min_bps, 1e-10));
  }
  SECTION("saturation below the floor is infeasible") {
    const SystemConfig hard = testsupport::stringent_scenario();
    const MinPowerResult mp = min_power_for_qos(hard);
    REQUIRE_FALSE(mp.ok());
    REQUIRE(mp.status == Feasibility::kSaturationBelowRmin);
    REQUIRE_THAT(mp.saturation_bps, WithinRel(kStringentSaturation, 1e-12));
    REQUIRE(mp.saturation_bps < hard.r_min_bps);
  }
  SECTION("a zero floor still needs the positive-rate threshold power") {
    SystemConfig c = cfg;
    c.r_min_bps = 0.0;
    const MinPowerResult mp = min_power_for_qos(c);
    REQUIRE(mp.ok());
    REQUIRE_THAT(mp.p_min_watt, WithinRel(kBaseZeroRatePower, 1e-12));
    const double oracle = testsupport::bisect_power_for_rate(c, c.eps_max, 0.0);
    REQUIRE_THAT(mp.p_min_watt, WithinRel(oracle, 1e-9));
  }
  SECTION("a low power cap turns the floor infeasible") {
    SystemConfig c = cfg;
    c.p_max_watt = 0.3;  // below the 0.5 W floor requirement
    const MinPowerResult mp = min_power_for_qos(c);
    REQUIRE(mp.status == Feasibility::kPminExceedsPmax);
  }
}

TEST_CASE("saturation capacity", "[analytics]") {
  const SystemConfig cfg = testsupport::base_scenario();
  const double sat = saturation_capacity_bps(cfg);
  REQUIRE_THAT(sat, WithinRel(kBaseSaturation, 1e-12));
  SECTION("matches the large-power limit of the rate to 4 significant digits") {
    const double r = secrecy_outage_capacity(1e6, cfg.eps_max, cfg);
    REQUIRE_THAT(r, WithinRel(sat, 1e-4));
  }
  SECTION("upper-bounds every finite-power rate, approached monotonically") {
    double prev = -1e18;
    for (double p : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
      const double r = secrecy_outage_capacity(p, cfg.eps_max, cfg);
      REQUIRE(r < sat);
      REQUIRE(r > prev);
      prev = r;
    }
  }
  SECTION("stringent scenario value") {
    REQUIRE_THAT(saturation_capacity_bps(testsupport::stringent_scenario()),
                 WithinRel(kStringentSaturation, 1e-12));
  }
}

TEST_CASE("energy efficiency point", "[analytics]") {
  const SystemConfig cfg = testsupport::base_scenario();
  SECTION("reference values at the fixed-power baseline and the QoS floor") {
    REQUIRE_THAT(energy_efficiency(10.0, cfg).ee_bpj,
                 WithinRel(kBaseEeAt10W, 1e-12));
    const double ee_at_pmin = energy_efficiency(kBasePmin, cfg).ee_bpj;
    REQUIRE_THAT(ee_at_pmin, WithinRel(1492733.4310994935, 1e-9));
  }
  SECTION("clamps the efficiency to zero where the rate is nonpositive") {
    const SecrecyPoint pt = energy_efficiency(0.9 * kBaseZeroRatePower, cfg);
    REQUIRE(pt.r_sec_bps < 0.0);
    REQUIRE(pt.r_sec_clamped_bps == 0.0);
    REQUIRE(pt.ee_bpj == 0.0);
  }
  SECTION("invariants across a power grid") {
    for (double p = 0.01; p < 10.0; p += 0.37) {
      const SecrecyPoint pt = energy_efficiency(p, cfg);
      REQUIRE(pt.r_sec_clamped_bps == std::max(pt.r_sec_bps, 0.0));
      REQUIRE(pt.ee_bpj >= 0.0);
      REQUIRE((pt.ee_bpj == 0.0) == (pt.r_sec_bps <= 0.0));
      REQUIRE(pt.p_positive >= 0.0);
      REQUIRE(pt.p_positive <= 1.0);
    }
  }
}
