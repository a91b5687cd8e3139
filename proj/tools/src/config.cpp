// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <map>
#include <sstream>

#include "rpsense/error.hpp"

namespace rpsense::cli {

std::vector<double> parse_eta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InvalidArgument("eta: empty entry in list '" + text + "'");
    item = item.substr(first, last - first + 1);
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("eta: '" + item + "' is not a number");
    }
    if (!(v > 0.0)) throw InvalidArgument("eta: values must be > 0 (got '" + item + "')");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("eta: list is empty");
  return out;
}

bool parse_command_line(int argc, const char* const* argv, RunConfig& cfg, std::string& help_text) {
  CLI::App app{"Radical-pair quantum sensor simulations", "rpsense"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.allow_config_extras(false);

  const std::map<std::string, Command> commands{
      {"oscillations", Command::oscillations}, {"field-scan", Command::field_scan},
      {"ensemble", Command::ensemble},         {"teer", Command::teer},
      {"control", Command::control},           {"planner", Command::planner}};
  app.add_option("command", cfg.command, "oscillations | field-scan | ensemble | teer | control | planner")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));

  app.add_option("--out", cfg.out, "output file (stdout if omitted)");
  app.add_option("--seed", cfg.seed, "seed for random phases");
  app.add_option("--units", cfg.units, "ha | physical")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Units>{{"ha", Units::ha}, {"physical", Units::physical}}));

  app.add_option("--ha", cfg.ha, "hyperfine coupling");
  app.add_option("--omega", cfg.omega, "external field");
  app.add_option("--g", cfg.g, "sensor coupling");
  app.add_option("--kappa", cfg.kappa, "recombination rate");
  app.add_option("--gamma", cfg.gamma, "sensor relaxation rate");
  app.add_option("--polarization", cfg.polarization, "nuclear polarization in [-1, 1]");
  app.add_option("--subspace", cfg.subspace, "sensor subspace: plus | minus")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, SensorSubspace>{{"plus", SensorSubspace::plus}, {"minus", SensorSubspace::minus}}));

  app.add_option("--t-min", cfg.time.t_start, "first time sample");
  app.add_option("--t-max", cfg.time.t_end, "last time sample");
  app.add_option("--t-points", cfg.time.n_points, "number of time samples");
  app.add_option("--omega-min", cfg.omega_range.min, "field scan start");
  app.add_option("--omega-max", cfg.omega_range.max, "field scan end");
  app.add_option("--omega-steps", cfg.omega_range.steps, "field scan samples");
  app.add_option("--tau-min", cfg.tau_range.min, "tau scan start");
  app.add_option("--tau-max", cfg.tau_range.max, "tau scan end");
  app.add_option("--tau-steps", cfg.tau_range.steps, "tau scan samples");

  std::string eta_text;
  app.add_option("--eta", eta_text, "comma-separated coupling-distribution widths, 'inf' for a single pair");
  app.add_option("--n-nodes", cfg.n_nodes, "Gauss-Hermite nodes per finite eta (odd)");
  app.add_option("--phase-samples", cfg.phase_samples, "random-phase draws for the averaged triplet column");

  app.add_option("--m-pulses", cfg.m_pulses, "number of free segments M (even)");
  app.add_option("--variant", cfg.variant, "radical-pair pulse: pi | pi2")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, TeerVariant>{{"pi", TeerVariant::pi}, {"pi2", TeerVariant::pi_half}}));
  app.add_option("--frozen-rp", cfg.frozen_rp, "freeze hyperfine and Zeeman terms during the echo");
  app.add_option("--readout-phase", cfg.readout_phase, "phase of the final sensor pi/2 pulse (rad)");
  app.add_option("--mode", cfg.mode, "control scan: tau | toggle")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ControlMode>{{"tau", ControlMode::tau}, {"toggle", ControlMode::toggle}}));
  app.add_option("--sensor-level", cfg.sensor_level, "sensor level held during the toggle scan");

  auto& e = cfg.experiment;
  app.add_option("--distance", e.distance, "sensor to radical-pair distance (m)");
  app.add_option("--moment", e.moment, "magnetic moment (J/T)");
  app.add_option("--angle", e.angle, "angle between moment and separation (rad)");
  app.add_option("--sensitivity", e.sensitivity, "magnetometer sensitivity (T/sqrt(Hz))");
  app.add_option("--shot-duration", e.shot_duration, "single-shot duration (s)");
  app.add_option("--single-shot-snr", e.single_shot_snr, "single-shot SNR");
  app.add_option("--target-snr", e.target_snr, "target SNR");
  app.add_option("--efficiency", e.efficiency, "fraction of ideal signal retained");
  app.add_option("--data-points", cfg.data_points, "number of points in a full data set");
  app.add_option("--target-time", cfg.target_time, "averaging time used for the efficiency estimate (s)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    help_text = app.help();
    return false;
  } catch (const CLI::ParseError& err) {
    throw InvalidArgument(err.what());
  }
  if (!eta_text.empty()) cfg.etas = parse_eta_list(eta_text);
  return true;
}

ModelSetup to_model(const RunConfig& cfg) {
  ModelSetup m;
  auto& p = m.params;
  p.h_a = 1.0;
  p.nuclear_polarization = cfg.polarization;
  m.time = cfg.time;
  m.omega_range = cfg.omega_range;
  m.tau_range = cfg.tau_range;

  if (cfg.units == Units::ha) {
    if (cfg.ha != 1.0) {
      // Rescale so the model always works with h_a = 1.
      if (!(cfg.ha > 0.0) || !std::isfinite(cfg.ha)) throw InvalidArgument("ha: must be finite and > 0");
      m.time_scale = 1.0 / cfg.ha;
      m.field_scale = cfg.ha;
    }
  } else {
    if (!(cfg.ha > 0.0) || !std::isfinite(cfg.ha)) throw InvalidArgument("ha: must be finite and > 0 (Hz)");
    const double ha_rad = 2.0 * std::numbers::pi * cfg.ha;
    // Field in tesla: omega = 2 gamma_e B.
    m.time_scale = 1.0 / ha_rad;
    m.field_scale = ha_rad / (2.0 * planner::kElectronGyromagnetic);
  }

  // Hz and h_A-unit couplings both reduce to the ratio g / ha.
  p.omega = cfg.omega / m.field_scale;
  p.g = cfg.g / cfg.ha;
  p.kappa = cfg.kappa * m.time_scale;
  p.gamma = cfg.gamma * m.time_scale;

  m.time.t_start = cfg.time.t_start / m.time_scale;
  m.time.t_end = cfg.time.t_end / m.time_scale;
  m.tau_range.min = cfg.tau_range.min / m.time_scale;
  m.tau_range.max = cfg.tau_range.max / m.time_scale;
  m.omega_range.min = cfg.omega_range.min / m.field_scale;
  m.omega_range.max = cfg.omega_range.max / m.field_scale;

  p.validate();
  m.time.validate();
  m.omega_range.validate();
  m.tau_range.validate();
  return m;
}

}  // namespace rpsense::cli
