// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0

#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "secmimo/sweep.hpp"
#include "support/scenarios.hpp"

using Catch::Matchers::ContainsSubstring;
using namespace secmimo;

TEST_CASE("figure presets", "[sweep]") {
  SECTION("fig2 is the reference comparison across path loss") {
    const FigurePreset p = figure_preset("fig2");
    REQUIRE(p.cfg.n_t == 20);
    REQUIRE(p.cfg.n_r == 2);
    REQUIRE(p.cfg.eps_max == 0.05);
    REQUIRE(p.cfg.rho == 0.8);
    REQUIRE(p.param == SweepParam::kAlpha);
    REQUIRE(p.values.size() == 9);
    REQUIRE(p.values.front() == 0.6);
    REQUIRE(p.values.back() == 1.4);
  }
  SECTION("fig4 sweeps the transmit array size") {
    const FigurePreset p = figure_preset("fig4");
    REQUIRE(p.param == SweepParam::kNt);
    REQUIRE(p.cfg.eps_max == 0.01);
    REQUIRE(p.cfg.alpha == 1.4);
  }
  SECTION("fig5 sweeps the CSI quality") {
    const FigurePreset p = figure_preset("fig5");
    REQUIRE(p.param == SweepParam::kRho);
    REQUIRE(p.cfg.n_t == 40);
    REQUIRE(p.cfg.eps_max == 0.01);
    REQUIRE(p.values == std::vector<double>{0.8, 0.9, 0.95, 1.0});
  }
  SECTION("unknown presets are rejected") {
    REQUIRE_THROWS_AS(figure_preset("fig7"), ValidationError);
  }
}

TEST_CASE("sweep parameter parsing", "[sweep]") {
  REQUIRE(sweep_param_from_string("alpha") == SweepParam::kAlpha);
  REQUIRE(sweep_param_from_string("n_t") == SweepParam::kNt);
  REQUIRE(sweep_param_from_string("eps_max") == SweepParam::kEpsMax);
  REQUIRE_THROWS_AS(sweep_param_from_string("bandwidth"), ValidationError);
  REQUIRE_THROWS_WITH(
      with_param(testsupport::base_scenario(), SweepParam::kNt, 20.5),
      ContainsSubstring("integer"));
}

TEST_CASE("path-loss sweep of the reference scenario", "[sweep]") {
  const FigurePreset p = figure_preset("fig2");
  const std::vector<SweepRow> rows = sweep(p.cfg, p.param, p.values);
  REQUIRE(rows.size() == p.values.size());

  SECTION("proposed efficiency is nonincreasing in the path loss") {
    for (std::size_t i = 1; i < rows.size(); ++i)
      REQUIRE(rows[i].ee_proposed_bpj <= rows[i - 1].ee_proposed_bpj);
  }
  SECTION("optimizing beats the fixed-power baseline on feasible rows") {
    int feasible = 0;
    for (const SweepRow& row : rows) {
      if (row.status != SolveStatus::kOptimal) continue;
      ++feasible;
      REQUIRE(row.ee_proposed_bpj >= row.ee_fixed_bpj);
      REQUIRE(row.p_star_watt.has_value());
    }
    REQUIRE(feasible >= 5);
  }
  SECTION("infeasible rows carry zero efficiency and no power") {
    for (const SweepRow& row : rows) {
      if (row.status == SolveStatus::kInfeasible) {
        REQUIRE(row.ee_proposed_bpj == 0.0);
        REQUIRE_FALSE(row.p_star_watt.has_value());
      }
    }
  }
  SECTION("rows keep the input order") {
    for (std::size_t i = 0; i < rows.size(); ++i)
      REQUIRE(rows[i].value == p.values[i]);
  }
}

TEST_CASE("eavesdropper antenna sweep collapses at four antennas", "[sweep]") {
  const FigurePreset p = figure_preset("fig6");
  const std::vector<SweepRow> rows = sweep(p.cfg, p.param, p.values);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 1; i < rows.size(); ++i)
    REQUIRE(rows[i].ee_proposed_bpj <= rows[i - 1].ee_proposed_bpj);
  REQUIRE(rows.back().ee_proposed_bpj == 0.0);
  REQUIRE(rows.back().status == SolveStatus::kInfeasible);
}

TEST_CASE("antenna scaling rescues the stringent scenario", "[sweep]") {
  const FigurePreset p = figure_preset("fig4");
  const std::vector<SweepRow> rows = sweep(p.cfg, p.param, p.values);
  REQUIRE(rows.front().status == SolveStatus::kInfeasible);
  REQUIRE(rows.front().ee_proposed_bpj == 0.0);
  double prev = -1.0;
  for (const SweepRow& row : rows) {
    if (row.status != SolveStatus::kOptimal) continue;
    REQUIRE(row.ee_proposed_bpj > prev);
    prev = row.ee_proposed_bpj;
  }
  REQUIRE(prev > 0.0);
}

TEST_CASE("efficiency is nondecreasing in CSI quality", "[sweep]") {
  const FigurePreset p = figure_preset("fig5");
  const std::vector<SweepRow> rows = sweep(p.cfg, p.param, p.values);
  for (std::size_t i = 1; i < rows.size(); ++i)
    REQUIRE(rows[i].ee_proposed_bpj >= rows[i - 1].ee_proposed_bpj);
}

TEST_CASE("csv serialization", "[sweep]") {
  const SystemConfig cfg = testsupport::base_scenario();
  const std::vector<SweepRow> rows =
      sweep(cfg, SweepParam::kAlpha, {1.0, 1.4});
  std::ostringstream os;
  write_csv(os, rows);
  const std::string text = os.str();
  REQUIRE_THAT(text, ContainsSubstring(
                         "param,value,ee_proposed,ee_fixed,p_star,status\n"));
  REQUIRE_THAT(text, ContainsSubstring("alpha,1,"));
  REQUIRE_THAT(text, ContainsSubstring(",optimal\n"));
  // alpha = 1.4 is infeasible here: empty p_star column.
  REQUIRE_THAT(text, ContainsSubstring(",,infeasible\n"));

  SECTION("output is deterministic") {
    std::ostringstream again;
    write_csv(again, sweep(cfg, SweepParam::kAlpha, {1.0, 1.4}));
    REQUIRE(again.str() == text);
  }
}

TEST_CASE("sweep rejects empty value lists", "[sweep]") {
  REQUIRE_THROWS_AS(
      sweep(testsupport::base_scenario(), SweepParam::kAlpha, {}),
      ValidationError);
}

TEST_CASE("fixed-power baseline clamps negative rates to zero efficiency",
          "[sweep]") {
  // At alpha = 2 with a stringent outage target even the full power budget
  // yields a negative rate, so the baseline column must clamp.
  SystemConfig cfg = testsupport::base_scenario();
  cfg.eps_max = 0.01;
  const std::vector<SweepRow> rows = sweep(cfg, SweepParam::kAlpha, {2.0});
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].status == SolveStatus::kInfeasible);
  REQUIRE(rows[0].ee_proposed_bpj == 0.0);
  REQUIRE(rows[0].ee_fixed_bpj == 0.0);
  REQUIRE(secrecy_outage_capacity(cfg.p_max_watt, cfg.eps_max,
                                  with_param(cfg, SweepParam::kAlpha, 2.0)) <
          0.0);
}

TEST_CASE("a sweep across the power cap hits the pmin-exceeds-pmax reason",
          "[sweep]") {
  SystemConfig cfg = testsupport::base_scenario();
  cfg.p_max_watt = 0.3;  // below the QoS floor requirement of ~0.505 W
  const PowerAllocationResult res = dinkelbach_solve(cfg);
  REQUIRE(res.status == SolveStatus::kInfeasible);
  REQUIRE(res.infeasibility_reason == Feasibility::kPminExceedsPmax);
  REQUIRE(res.saturation_bps > cfg.r_min_bps);
}
