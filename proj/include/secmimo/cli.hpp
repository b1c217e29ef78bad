// Copyright (c) 2026 secmimo contributors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Subcommands: analyze, optimize, simulate, sweep,
// fig. Scenario values come from built-in defaults, then an optional JSON
// config file, then explicit flag overrides; the effective config is echoed
// into every JSON output record. Infeasible results exit 0 (they are data);
// validation and usage problems exit 2; internal failures exit 1.

#ifndef SECMIMO_CLI_HPP
#define SECMIMO_CLI_HPP

#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "secmimo/analytics.hpp"
#include "secmimo/channel_mc.hpp"
#include "secmimo/config.hpp"
#include "secmimo/io.hpp"
#include "secmimo/optimizer.hpp"
#include "secmimo/sweep.hpp"

namespace secmimo::cli {

namespace detail {

struct ConfigFlags {
  std::string config_path;
  int n_t = 0;
  int n_r = 0;
  double bandwidth = 0.0;
  double alpha = 0.0;
  double rho = 0.0;
  double eps_max = 0.0;
  double r_min = 0.0;
  double p0 = 0.0;
  double p_max = 0.0;
  CLI::Option* o_config = nullptr;
  CLI::Option* o_n_t = nullptr;
  CLI::Option* o_n_r = nullptr;
  CLI::Option* o_bandwidth = nullptr;
  CLI::Option* o_alpha = nullptr;
  CLI::Option* o_rho = nullptr;
  CLI::Option* o_eps_max = nullptr;
  CLI::Option* o_r_min = nullptr;
  CLI::Option* o_p0 = nullptr;
  CLI::Option* o_p_max = nullptr;
};

struct OutputFlags {
  std::string out_path;
  std::string format;
};

inline void add_override_flags(CLI::App* sub, ConfigFlags& f) {
  f.o_n_t = sub->add_option("--nt", f.n_t, "Base-station antenna count");
  f.o_n_r = sub->add_option("--nr", f.n_r, "Eavesdropper antenna count");
  f.o_bandwidth =
      sub->add_option("--bandwidth", f.bandwidth, "Bandwidth W in Hz");
  f.o_alpha =
      sub->add_option("--alpha", f.alpha, "Relative eavesdropper path loss");
  f.o_rho = sub->add_option("--rho", f.rho, "CSI correlation, in (0,1]");
  f.o_eps_max = sub->add_option("--eps-max", f.eps_max,
                                "Secrecy outage target, in (0,1)");
  f.o_r_min = sub->add_option("--rmin", f.r_min, "QoS rate floor in bit/s");
  f.o_p0 = sub->add_option("--p0", f.p0, "Circuit power in W");
  f.o_p_max = sub->add_option("--pmax", f.p_max, "Transmit power cap in W");
}

inline void add_config_flags(CLI::App* sub, ConfigFlags& f) {
  f.o_config = sub->add_option("--config", f.config_path,
                               "JSON scenario file (flags override it)");
  add_override_flags(sub, f);
}

inline void add_output_flags(CLI::App* sub, OutputFlags& f) {
  sub->add_option("--out", f.out_path, "Output path (default: stdout)");
  sub->add_option("--format", f.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

inline void apply_overrides(SystemConfig& cfg, const ConfigFlags& f) {
  if (f.o_n_t && f.o_n_t->count() > 0) cfg.n_t = f.n_t;
  if (f.o_n_r && f.o_n_r->count() > 0) cfg.n_r = f.n_r;
  if (f.o_bandwidth && f.o_bandwidth->count() > 0)
    cfg.bandwidth_hz = f.bandwidth;
  if (f.o_alpha && f.o_alpha->count() > 0) cfg.alpha = f.alpha;
  if (f.o_rho && f.o_rho->count() > 0) cfg.rho = f.rho;
  if (f.o_eps_max && f.o_eps_max->count() > 0) cfg.eps_max = f.eps_max;
  if (f.o_r_min && f.o_r_min->count() > 0) cfg.r_min_bps = f.r_min;
  if (f.o_p0 && f.o_p0->count() > 0) cfg.p0_watt = f.p0;
  if (f.o_p_max && f.o_p_max->count() > 0) cfg.p_max_watt = f.p_max;
}

/// defaults -> config file -> flag overrides, then validation.
inline SystemConfig resolve_config(const ConfigFlags& f,
                                   SolverSettings& solver) {
  SystemConfig cfg;
  if (f.o_config && f.o_config->count() > 0) {
    const ScenarioFile file = load_scenario_file(f.config_path);
    cfg = file.config;
    if (file.has_solver) solver = file.solver;
  }
  apply_overrides(cfg, f);
  validate(solver);
  return validate(cfg);
}

inline void write_output(const OutputFlags& f, std::ostream& fallback,
                         const std::string& payload) {
  if (f.out_path.empty()) {
    fallback << payload;
    return;
  }
  std::ofstream file(f.out_path, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file: " + f.out_path);
  file << payload;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void require_json_format(const OutputFlags& f) {
  if (!f.format.empty() && f.format != "json")
    throw ValidationError(
        "--format csv is only supported for the sweep and fig subcommands");
}

}  // namespace detail

/// Parses and executes one invocation, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{
      "Secrecy analysis and energy-efficient power allocation for "
      "large-scale MIMO wiretap channels"};
  app.name("secmimo");
  app.require_subcommand(1);

  detail::ConfigFlags analyze_cfg, optimize_cfg, simulate_cfg, sweep_cfg;
  detail::OutputFlags analyze_out, optimize_out, simulate_out, sweep_out,
      fig_out;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Evaluate the closed-form secrecy metrics at one power");
  detail::add_config_flags(analyze, analyze_cfg);
  detail::add_output_flags(analyze, analyze_out);
  double analyze_p = 1.0;
  analyze->add_option("--p", analyze_p, "Transmit power in W")->required();

  CLI::App* optimize = app.add_subcommand(
      "optimize", "Solve for the energy-efficiency-optimal transmit power");
  detail::add_config_flags(optimize, optimize_cfg);
  detail::add_output_flags(optimize, optimize_out);
  bool verify = false;
  optimize->add_flag("--verify", verify,
                     "Cross-check the solution against the grid-search oracle");

  CLI::App* simulate = app.add_subcommand(
      "simulate",
      "Monte-Carlo validation of the closed forms on the channel model");
  detail::add_config_flags(simulate, simulate_cfg);
  detail::add_output_flags(simulate, simulate_out);
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  double simulate_p = 1.0;
  simulate->add_option("--seed", seed, "Master RNG seed");
  simulate->add_option("--samples", samples, "Samples per estimate");
  simulate->add_option("--p", simulate_p, "Transmit power in W");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Solve across a list of parameter values");
  detail::add_config_flags(sweep_cmd, sweep_cfg);
  detail::add_output_flags(sweep_cmd, sweep_out);
  std::string sweep_param;
  std::vector<double> sweep_values;
  sweep_cmd
      ->add_option("--param", sweep_param,
                   "Swept parameter: alpha, n_t, n_r, rho or eps_max")
      ->required();
  sweep_cmd->add_option("--values", sweep_values, "Comma-separated values")
      ->required()
      ->delimiter(',');

  CLI::App* fig = app.add_subcommand(
      "fig", "Run a registered sweep preset (fig2..fig6)");
  detail::ConfigFlags fig_overrides;  // presets define the scenario; flags may
                                      // still override single fields
  detail::add_override_flags(fig, fig_overrides);
  detail::add_output_flags(fig, fig_out);
  std::string preset_name;
  fig->add_option("--preset", preset_name, "Preset name (fig2..fig6)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (analyze->parsed()) {
      SolverSettings solver;
      const SystemConfig cfg = detail::resolve_config(analyze_cfg, solver);
      detail::require_json_format(analyze_out);
      const SecrecyPoint pt = energy_efficiency(analyze_p, cfg);
      const MinPowerResult mp = min_power_for_qos(cfg);
      Json j{{"config", to_json(cfg)}};
      j["p_watt"] = pt.p_watt;
      j["r_sec_bps"] = pt.r_sec_bps;
      j["r_sec_clamped_bps"] = pt.r_sec_clamped_bps;
      j["ee_bpj"] = pt.ee_bpj;
      j["p_positive"] = pt.p_positive;
      j["saturation_bps"] = mp.saturation_bps;
      j["feasibility"] = to_string(mp.status);
      if (mp.ok())
        j["p_min_watt"] = mp.p_min_watt;
      else
        j["p_min_watt"] = nullptr;
      detail::write_output(analyze_out, out, detail::dump(j));
    } else if (optimize->parsed()) {
      SolverSettings solver;
      const SystemConfig cfg = detail::resolve_config(optimize_cfg, solver);
      detail::require_json_format(optimize_out);
      const PowerAllocationResult res = dinkelbach_solve(cfg, solver);
      Json j{{"config", to_json(cfg)}, {"solver", to_json(solver)}};
      j.update(to_json(res));
      if (verify && res.status == SolveStatus::kOptimal) {
        const GridSearchResult grid =
            grid_search_oracle(cfg, solver.grid_points);
        const double rel =
            std::abs(res.q_star_bpj - grid.ee_star_bpj) /
            std::max(grid.ee_star_bpj, 1e-300);
        j["verify"] = Json{{"grid_points", solver.grid_points},
                           {"grid_p_star_watt", grid.p_star_watt},
                           {"grid_ee_star_bpj", grid.ee_star_bpj},
                           {"relative_gap", rel}};
      }
      detail::write_output(optimize_out, out, detail::dump(j));
    } else if (simulate->parsed()) {
      SolverSettings solver;
      const SystemConfig cfg = detail::resolve_config(simulate_cfg, solver);
      detail::require_json_format(simulate_out);
      const double p = simulate_p;
      const std::vector<double> snr =
          mc::sample_eavesdropper_snr(cfg, p, samples, seed);
      const double ks = mc::ks_distance(snr, [&](double x) {
        return x <= 0.0 ? 0.0
                        : eavesdropper_gain_cdf(x, p, cfg.alpha, cfg.n_r);
      });
      const double r_at_eps = secrecy_outage_capacity(p, cfg.eps_max, cfg);
      const mc::McEstimate outage =
          mc::empirical_outage(cfg, r_at_eps, p, samples, seed + 1);
      const mc::McEstimate positive =
          mc::positive_secrecy_fraction(cfg, p, samples, seed + 2);
      const mc::CapacityConvergencePoint cap =
          mc::legitimate_capacity_convergence(cfg, {cfg.n_t}, p, samples,
                                              seed + 3)
              .front();
      Json j{{"config", to_json(cfg)}};
      j["p_watt"] = p;
      j["seed"] = seed;
      j["samples"] = samples;
      j["eavesdropper_snr_ks"] = ks;
      j["outage"] = Json{{"target_eps", cfg.eps_max},
                         {"r_sec_bps", r_at_eps},
                         {"estimate", to_json(outage)}};
      j["positive_secrecy"] =
          Json{{"analytic", positive_secrecy_probability(p, cfg)},
               {"estimate", to_json(positive)}};
      j["legitimate_capacity"] = Json{{"mean_bps", cap.mean_capacity_bps},
                                      {"stderr_bps", cap.stderr_bps},
                                      {"asymptote_bps", cap.asymptote_bps},
                                      {"relative_error", cap.relative_error}};
      detail::write_output(simulate_out, out, detail::dump(j));
    } else if (sweep_cmd->parsed()) {
      SolverSettings solver;
      const SystemConfig cfg = detail::resolve_config(sweep_cfg, solver);
      const SweepParam param = sweep_param_from_string(sweep_param);
      const std::vector<SweepRow> rows = sweep(cfg, param, sweep_values, solver);
      if (sweep_out.format == "json") {
        Json j{{"config", to_json(cfg)},
               {"solver", to_json(solver)},
               {"param", to_string(param)},
               {"rows", to_json(rows)}};
        detail::write_output(sweep_out, out, detail::dump(j));
      } else {
        std::ostringstream csv;
        write_csv(csv, rows);
        detail::write_output(sweep_out, out, csv.str());
      }
    } else if (fig->parsed()) {
      const FigurePreset preset = figure_preset(preset_name);
      SystemConfig cfg = preset.cfg;
      detail::apply_overrides(cfg, fig_overrides);
      validate(cfg);
      const SolverSettings solver;
      const std::vector<SweepRow> rows =
          sweep(cfg, preset.param, preset.values, solver);
      if (fig_out.format == "json") {
        Json j{{"preset", preset.name},
               {"config", to_json(cfg)},
               {"solver", to_json(solver)},
               {"param", to_string(preset.param)},
               {"rows", to_json(rows)}};
        detail::write_output(fig_out, out, detail::dump(j));
      } else {
        std::ostringstream csv;
        write_csv(csv, rows);
        detail::write_output(fig_out, out, csv.str());
      }
    }
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace secmimo::cli

#endif  // SECMIMO_CLI_HPP
