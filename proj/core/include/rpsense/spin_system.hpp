// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "rpsense/operator.hpp"

namespace rpsense {

/// Physical constants of one sensor + radical-pair instance. All entries are
/// angular frequencies or rates in one consistent unit system (h_a = 1 for
/// the dimensionless default). The combined decay rate kappa~ is always
/// derived from kappa + gamma.
struct RadicalPairParams {
  double h_a = 1.0;    // hyperfine coupling of electron A to the nucleus
  double h_b = 0.0;    // hyperfine coupling of electron B (must be 0)
  double omega = 0.0;  // external-field Larmor frequency
  double g = 0.0;      // sensor / radical-pair coupling
  double kappa = 0.0;  // singlet recombination rate
  double gamma = 0.0;  // sensor relaxation rate
  double nuclear_polarization = 0.0;  // 0 = thermal, +-1 = fully polarized

  double kappa_tilde() const noexcept { return kappa + gamma; }

  /// Throws InvalidArgument naming the offending field.
  void validate() const;

  /// Copy with the field replaced.
  RadicalPairParams with_omega(double w) const {
    auto p = *this;
    p.omega = w;
    return p;
  }
  RadicalPairParams with_g(double coupling) const {
    auto p = *this;
    p.g = coupling;
    return p;
  }
};

/// Subsystem roles. Each layout lists them in tensor-product order.
enum class Slot { sensor, electron_a, electron_b, nucleus };

class SystemLayout {
 public:
  explicit SystemLayout(std::vector<Slot> slots);

  /// electron_a (x) electron_b (x) nucleus, dims 2*2*2.
  static SystemLayout radical_pair();
  /// sensor (x) electron_a (x) electron_b (x) nucleus, dims 3*2*2*2.
  static SystemLayout with_sensor();

  const std::vector<Slot>& slots() const noexcept { return slots_; }
  std::vector<int> dims() const;
  int dim() const;
  std::optional<int> index_of(Slot s) const;
  bool has_sensor() const { return index_of(Slot::sensor).has_value(); }

  /// Embeds a single-slot operator at `s`, identity elsewhere.
  Operator embed(Slot s, const Operator& local) const;

 private:
  std::vector<Slot> slots_;
};

/// The two-level sensor manifold used for Ramsey/pulse dynamics:
/// {|0>, |+1>} or {|0>, |-1>}.
enum class SensorSubspace { plus, minus };

/// Sz eigenvalue of the non-zero level of the subspace (+1 or -1).
inline int sensor_level(SensorSubspace s) { return s == SensorSubspace::plus ? +1 : -1; }

/// Row index of the spin-1 level m in the (+1, 0, -1) basis.
int sensor_index(int m);

/// (|ud> - |du>)/sqrt(2) in the electron_a (x) electron_b basis.
Vector singlet_ket();

/// Rank-1 singlet projector on the electron pair, identity on the other slots.
/// Throws InvalidArgument if the layout lacks either electron slot.
Operator singlet_projector(const SystemLayout& layout);

/// Full Hamiltonian
///   h_a I.S_A + omega (S_Az + S_Bz) [+ g S^z (S_Az + S_Bz)]
/// with spin-1/2 operators for electrons and nucleus. With `include_sensor`
/// the result lives on the 24-dimensional sensor layout and is block diagonal
/// in the sensor Sz basis; otherwise it is the 8-dimensional H0.
Operator build_hamiltonian(const RadicalPairParams& p, bool include_sensor);

/// The radical-pair block seen when the sensor sits in level m: H0 with
/// omega -> omega + m g.
Operator branch_hamiltonian(const RadicalPairParams& p, int m);

/// Only the sensor coupling term g S^z (S_Az + S_Bz) on the sensor layout.
/// Used when the radical pair is treated as quasi-static.
Operator coupling_hamiltonian(const RadicalPairParams& p);

/// Nuclear state (1 + P sigma_z)/2.
DensityMatrix nuclear_state(double polarization);

/// |S><S| (x) rho_I on the radical-pair layout.
DensityMatrix initial_radical_pair_state(const RadicalPairParams& p);

}  // namespace rpsense
