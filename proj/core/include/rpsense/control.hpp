// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <variant>
#include <vector>

#include "rpsense/dynamics.hpp"

namespace rpsense {

enum class PulseTarget { sensor, electron_a, electron_b, both_electrons };
enum class PulseAxis { x, y };

/// Ideal instantaneous rotation exp(+i angle n.S) with n in the xy plane at
/// azimuth (axis + phase). Sensor pulses act on the pseudo spin-1/2 of the
/// chosen two-level subspace (|0> up, |m> down) and leave the third level
/// alone.
struct Pulse {
  PulseTarget target = PulseTarget::sensor;
  PulseAxis axis = PulseAxis::x;
  double angle = std::numbers::pi;
  double phase = 0.0;
};

struct FreeEvolution {
  double duration = 0.0;
};

using SequenceEvent = std::variant<FreeEvolution, Pulse>;

/// Events applied left to right.
struct PulseSequence {
  std::vector<SequenceEvent> events;

  PulseSequence& free(double duration) {
    events.emplace_back(FreeEvolution{duration});
    return *this;
  }
  PulseSequence& pulse(const Pulse& p) {
    events.emplace_back(p);
    return *this;
  }

  /// Throws InvalidArgument on negative/non-finite durations or angles
  /// outside (-2 pi, 2 pi].
  void validate() const;
  double total_duration() const;
};

struct SequenceOptions {
  /// Drop hyperfine and Zeeman terms during free evolution; only the
  /// sensor coupling g S^z (S_Az + S_Bz) remains.
  bool frozen_rp = false;
  SensorSubspace subspace = SensorSubspace::plus;
};

/// 24-dimensional unitary of one pulse.
Operator pulse_unitary(const Pulse& pulse, SensorSubspace subspace);

/// Product of all event unitaries (free evolution uses exp(+iHt)).
Operator sequence_unitary(const PulseSequence& seq, const RadicalPairParams& p,
                          const SequenceOptions& opts = {});

/// U rho0 U^dagger for the sequence unitary. rho0 must live on the
/// 24-dimensional sensor layout.
DensityMatrix apply_sequence(const PulseSequence& seq, const DensityMatrix& rho0,
                             const RadicalPairParams& p, const SequenceOptions& opts = {});

/// Restriction of a 24-dimensional operator to the sensor subspace
/// {|0>, |m>} (x) radical pair, as a 16-dimensional operator with |0> first.
Operator restrict_to_sensor_subspace(const Operator& full, SensorSubspace subspace);

/// Literal stroboscopic product: m_pulses free segments of length tau
/// separated by m_pulses - 1 sensor pi pulses about x,
///   V_M = U X U X ... X U,
/// returned on the full 24-dimensional space. m_pulses = 0 gives U(tau).
/// The result is checked against stroboscopic_closed_form on the sensor
/// subspace (max deviation 1e-12, Error otherwise). Throws InvalidArgument for
/// odd or negative m_pulses.
Operator stroboscopic_evolution(const RadicalPairParams& p, double tau, int m_pulses,
                                SensorSubspace subspace = SensorSubspace::plus);

/// i^{M-1} [ (U1 U0)^{M/2} |1><0| + (U0 U1)^{M/2} |0><1| ] on the 16-dim
/// subspace, U0 = exp(i H0 tau), U1 = exp(i H_m tau). The i^{M-1} is the
/// global phase of the M-1 ideal pulses exp(i pi S^x) = i X. Requires even
/// M >= 2.
Operator stroboscopic_closed_form(const RadicalPairParams& p, double tau, int m_pulses,
                                  SensorSubspace subspace = SensorSubspace::plus);

struct YieldPoint {
  double x = 0.0;  // tau or omega, depending on the scan
  double singlet_yield = 0.0;
};

/// Sensor prepared in |0>; sensor pi pulses at tau, 2 tau, ..., (M-1) tau,
/// free evolution afterwards. Returns the exact recombination-weighted
/// singlet yield per tau. m_pulses = 0 is the uncontrolled yield.
std::vector<YieldPoint> controlled_yield_scan(const RadicalPairParams& p, const ScanRange& tau_range,
                                              int m_pulses,
                                              SensorSubspace subspace = SensorSubspace::plus);

/// Same quantity for a single tau.
double controlled_yield(const RadicalPairParams& p, double tau, int m_pulses,
                        SensorSubspace subspace = SensorSubspace::plus);

enum class RPStateLabel { S, T0, Tplus, Tminus };

/// Two-electron basis state: |S>, |T0> = (|ud> + |du>)/sqrt2, |uu>, |dd>.
Vector two_electron_ket(RPStateLabel label);

enum class TeerVariant { pi, pi_half };

struct TeerOptions {
  bool frozen_rp = true;
  /// Azimuth of the final sensor pi/2 relative to the first. Must satisfy
  /// cos(readout_phase) != 0 so the tau = 0 signal can normalize the curve.
  double readout_phase = std::numbers::pi / 4.0;
  SensorSubspace subspace = SensorSubspace::plus;
};

/// Sensor echo with a simultaneous radical-pair pulse:
///   sensor (pi/2)_x - tau - [sensor pi_x + RP pulse_x on both electrons]
///   - tau - sensor (pi/2)_{readout_phase},
/// RP pulse angle pi or pi/2 by variant. Readout is the population difference
/// P(|0>) - P(|m>), divided by its value at tau = 0.
TimeSeries teer_contrast(const RadicalPairParams& p, RPStateLabel state, const ScanRange& tau_range,
                         TeerVariant variant, const TeerOptions& opts = {});

/// Sensor held in level m_s (default -1) so the radical pair sees
/// omega + m_s g; returns the recombination-weighted singlet yield vs omega.
std::vector<YieldPoint> toggle_field_nulling_scan(const RadicalPairParams& p,
                                                  const ScanRange& omega_range,
                                                  int sensor_level_ms = -1);

}  // namespace rpsense
