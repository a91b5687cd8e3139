// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "rpsense/planner.hpp"

#include <cmath>
#include <string>

#include "rpsense/error.hpp"

namespace rpsense::planner {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidArgument(std::string("planner: ") + what + " must be finite and > 0");
  }
}

}  // namespace

void ExperimentParams::validate() const {
  require_positive(distance, "distance");
  require_positive(moment, "moment");
  require_positive(sensitivity, "sensitivity");
  require_positive(shot_duration, "shot_duration");
  require_positive(single_shot_snr, "single_shot_snr");
  require_positive(target_snr, "target_snr");
  require_positive(efficiency, "efficiency");
  if (efficiency > 1.0) throw InvalidArgument("planner: efficiency must be <= 1");
  if (!std::isfinite(angle)) throw InvalidArgument("planner: angle must be finite");
}

double dipole_field(double moment, double distance, double angle) {
  require_positive(moment, "moment");
  require_positive(distance, "distance");
  const double c = std::cos(angle);
  return 1e-7 * moment / (distance * distance * distance) * std::sqrt(3.0 * c * c + 1.0);
}

double dipole_field(const ExperimentParams& e) { return dipole_field(e.moment, e.distance, e.angle); }

std::uint64_t repetitions_for_snr(const ExperimentParams& e) {
  e.validate();
  const double ratio = e.target_snr / e.single_shot_snr;
  // Guard against 333.33...^2 landing a hair above an integer.
  const double n = ratio * ratio;
  const double rounded = std::round(n);
  if (std::abs(n - rounded) <= 1e-9 * rounded) return static_cast<std::uint64_t>(rounded);
  return static_cast<std::uint64_t>(std::ceil(n));
}

double measurement_time(const ExperimentParams& e) {
  return static_cast<double>(repetitions_for_snr(e)) * e.shot_duration;
}

double time_to_snr(const ExperimentParams& e, double field) {
  e.validate();
  require_positive(field, "field");
  const double root = e.target_snr * e.sensitivity / (e.efficiency * field);
  return root * root;
}

double required_efficiency(const ExperimentParams& e, double field, double target_time) {
  e.validate();
  require_positive(field, "field");
  require_positive(target_time, "target_time");
  return e.target_snr * e.sensitivity / (field * std::sqrt(target_time));
}

}  // namespace rpsense::planner
