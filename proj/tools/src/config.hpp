// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "rpsense/control.hpp"
#include "rpsense/ensemble.hpp"
#include "rpsense/planner.hpp"

namespace rpsense::cli {

enum class Command { oscillations, field_scan, ensemble, teer, control, planner };
enum class Units { ha, physical };
enum class ControlMode { tau, toggle };

// Raw option values as typed by the user. In physical units the hyperfine
// and coupling are in Hz, the field in tesla, rates in 1/s and times in s;
// otherwise everything is in units of the hyperfine coupling.
struct RunConfig {
  Command command = Command::oscillations;
  std::string out;
  std::uint64_t seed = 0;
  Units units = Units::ha;

  double ha = 1.0;
  double omega = 0.0;
  double g = 0.1;
  double kappa = 0.01;
  double gamma = 0.0;
  double polarization = 0.0;
  SensorSubspace subspace = SensorSubspace::plus;

  TimeGrid time{0.0, 200.0, 2000};
  ScanRange omega_range{0.0, 2.0, 200};
  ScanRange tau_range{0.0, 50.0, 200};

  std::vector<double> etas{std::numeric_limits<double>::infinity(), 400.0, 100.0};
  int n_nodes = 21;
  int phase_samples = 0;

  int m_pulses = 2;
  TeerVariant variant = TeerVariant::pi_half;
  bool frozen_rp = true;
  double readout_phase = std::numbers::pi / 4.0;
  ControlMode mode = ControlMode::tau;
  int sensor_level = -1;

  planner::ExperimentParams experiment;
  int data_points = 3600;
  double target_time = 10.0;
};

// Parameters and grids rescaled to hyperfine units, plus the factors that
// map the model axes back to the user's units for output.
struct ModelSetup {
  RadicalPairParams params;
  TimeGrid time;
  ScanRange omega_range;
  ScanRange tau_range;
  double time_scale = 1.0;   // model time * time_scale = output time
  double field_scale = 1.0;  // model omega * field_scale = output field
};

ModelSetup to_model(const RunConfig& cfg);

/// Parses argv (with an optional --config key=value file; flags win).
/// Throws InvalidArgument with a message naming the offending option.
/// Returns false if help was printed and the program should exit.
bool parse_command_line(int argc, const char* const* argv, RunConfig& cfg, std::string& help_text);

/// Comma-separated list of positive numbers; "inf" is accepted.
std::vector<double> parse_eta_list(const std::string& text);

}  // namespace rpsense::cli
