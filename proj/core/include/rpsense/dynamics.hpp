// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "rpsense/laplace.hpp"
#include "rpsense/operator.hpp"
#include "rpsense/propagator.hpp"
#include "rpsense/spin_system.hpp"

namespace rpsense {

/// Uniform grid of n_points samples over [t_start, t_end], both ends included.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 200.0;
  int n_points = 2000;

  void validate() const;
  std::vector<double> times() const;
};

struct TimeSeries {
  std::vector<double> times;
  std::vector<double> values;

  std::size_t size() const noexcept { return times.size(); }
  /// Throws InvalidArgument unless lengths agree and times strictly increase.
  void validate() const;
};

/// Uniform scan over [min, max] with `steps` samples (steps >= 1; one sample
/// sits at min).
struct ScanRange {
  double min = 0.0;
  double max = 2.0;
  int steps = 200;

  void validate() const;
  std::vector<double> values() const;
};

/// How the spin-1 sensor is prepared before free evolution.
enum class SensorState {
  zero,           // |0>
  plus_one,       // |+1>
  minus_one,      // |-1>
  superposition,  // (|0> + |m>)/sqrt(2), m from the subspace
};

struct SensorPreparation {
  SensorState state = SensorState::superposition;
  SensorSubspace subspace = SensorSubspace::plus;
};

DensityMatrix sensor_density(const SensorPreparation& prep);

/// Sensor (x) singlet (x) rho_I on the 24-dimensional layout.
DensityMatrix initial_full_state(const RadicalPairParams& p, const SensorPreparation& prep);

/// Radical-pair + nucleus state at time t with the sensor traced out.
DensityMatrix radical_pair_state_at(const RadicalPairParams& p, double t,
                                    const SensorPreparation& prep);

/// P_S(t) = <S| Tr_{nucleus[, sensor]} rho(t) |S>. Without the sensor the
/// radical pair evolves under H0; with it, under the full Hamiltonian from the
/// given sensor preparation.
TimeSeries singlet_probability_series(const RadicalPairParams& p, const TimeGrid& grid,
                                      bool with_sensor, const SensorPreparation& prep = {});

/// One-proton analytic singlet probability
///
///   3/8 + w^2/(8 W^2) + h^2/(8 W^2) f(W)
///     + (1 - w/W)/8 [f((h+w+W)/2) + f((h-w-W)/2)]
///     + (1 + w/W)/8 [f((h-w+W)/2) + f((h+w-W)/2)],   W = sqrt(h^2 + w^2),
///
/// with f(x) = cos(x t + phi). A term whose frequency x is exactly zero is
/// static and carries no phase (f = 1). Throws InvalidArgument unless h > 0.
double timmel_singlet_analytic(double h, double omega, double t, double phi = 0.0);

struct ContrastSeries {
  TimeSeries raw;         // 4 Re Tr[U0 rho U1^dagger], raw(0) = 4
  TimeSeries normalized;  // raw / raw(0)
};

/// Ramsey overlap between the sensor branches, by explicit 8x8 products:
///   C(t) = 4 Re Tr[ e^{i H0 t} (|S><S| (x) rho_I) e^{-i H1 t} ],
/// H1 = H0 with omega -> omega + m g for the subspace level m.
ContrastSeries sensor_contrast_numeric(const RadicalPairParams& p, const TimeGrid& grid,
                                       SensorSubspace subspace = SensorSubspace::plus);

/// Omega_1 = sqrt(h_a^2 + omega^2), Omega_2 = sqrt(h_a^2 + (omega + g)^2).
struct ClosedFormFrequencies {
  double omega1 = 0.0;
  double omega2 = 0.0;

  static ClosedFormFrequencies from(const RadicalPairParams& p);
};

/// Published closed-form Ramsey contrast, transcribed term by term.
double sensor_contrast_closed_form(const RadicalPairParams& p, double t);

/// Published closed form of the recombination-weighted contrast
/// (kappa~ = kappa + gamma). Throws InvalidArgument if kappa~ <= 0 and
/// DomainError naming the factor if a denominator vanishes.
double contrast_yield_closed_form(const RadicalPairParams& p);

// Spectral representations (exact, used for yields and fast evaluation).

/// Tr[A U(t) rho U(t)^dagger] for U = exp(iHt).
SpectralSignal expectation_signal(const Propagator& h, const Operator& rho, const Operator& a);

/// P_S(t) of the bare radical pair in sensor level m (field omega + m g).
SpectralSignal singlet_signal(const RadicalPairParams& p, int m);

/// Raw Ramsey contrast 4 Re Tr[U0 rho U1^dagger] as a spectral sum.
SpectralSignal contrast_signal(const RadicalPairParams& p,
                               SensorSubspace subspace = SensorSubspace::plus);

/// Recombination-weighted singlet fraction and contrast at one field value.
struct FieldScanPoint {
  double omega = 0.0;
  double singlet_yield = 0.0;   // (Phi_S^m + Phi_S^0) / 2
  double contrast_yield = 0.0;  // Laplace average of the normalized contrast
};

/// Scans the external field; kappa~ comes from p. Yields are exact Laplace
/// averages of the spectral signals.
std::vector<FieldScanPoint> field_scan(const RadicalPairParams& p, const ScanRange& omega_range,
                                       SensorSubspace subspace = SensorSubspace::plus);

}  // namespace rpsense
