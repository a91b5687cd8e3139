// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numbers>

namespace rpsense::planner {

inline constexpr double kBohrMagneton = 9.2740100783e-24;  // J/T
inline constexpr double kElectronGyromagnetic = 1.76085963023e11;  // rad s^-1 T^-1

/// Field the feasibility estimate was quoted at (tesla) and the separation
/// it was quoted for (metres).
inline constexpr double kQuotedField = 59e-9;
inline constexpr double kQuotedDistance = 20e-9;

struct ExperimentParams {
  double distance = 20e-9;         // m
  double moment = kBohrMagneton;   // J/T
  double angle = std::numbers::pi / 2.0;  // between moment and separation
  double sensitivity = 10e-9;      // T Hz^-1/2
  double shot_duration = 10e-6;    // s
  double single_shot_snr = 0.03;
  double target_snr = 10.0;
  double efficiency = 1.0;

  void validate() const;
};

/// Point-dipole field magnitude, mu0/(4 pi) m / r^3 sqrt(3 cos^2 theta + 1).
double dipole_field(double moment, double distance, double angle);
double dipole_field(const ExperimentParams& e);

std::uint64_t repetitions_for_snr(const ExperimentParams& e);

/// repetitions_for_snr * shot_duration.
double measurement_time(const ExperimentParams& e);

/// Averaging time for target_snr given sensitivity, efficiency and field.
double time_to_snr(const ExperimentParams& e, double field);

/// Efficiency at which time_to_snr equals target_time.
double required_efficiency(const ExperimentParams& e, double field, double target_time);

}  // namespace rpsense::planner
