// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "rpsense/dynamics.hpp"

namespace rpsense {

/// Distribution of the random phase attached to each radical pair.
struct PhaseModel {
  enum class Kind { none, uniform, gaussian };
  Kind kind = Kind::uniform;  // uniform on [0, 2 pi)
  double width = 0.0;         // standard deviation for Kind::gaussian

  static PhaseModel none() { return {Kind::none, 0.0}; }
  static PhaseModel uniform() { return {Kind::uniform, 0.0}; }
  static PhaseModel gaussian(double width) { return {Kind::gaussian, width}; }
};

/// Quasi-static ensemble: coupling g distributed with weight
/// exp(-eta (g - g0)^2), normalized to unit mass (variance 1/(2 eta)), plus a
/// random phase model for the analytic triplet series.
///
/// eta = +inf is the delta limit and requires n_nodes == 1.
struct EnsembleSpec {
  double g0 = 0.1;
  double eta = std::numeric_limits<double>::infinity();
  int n_nodes = 1;
  PhaseModel phi_model = PhaseModel::uniform();
  int n_samples = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Gauss-Hermite rule for integral exp(-x^2) f(x) dx (Golub-Welsch).
struct GaussHermiteRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // sum to sqrt(pi)
};

GaussHermiteRule gauss_hermite_rule(int n);

/// Coupling nodes g_k = g0 + x_k / sqrt(eta) with unit-mass weights w_k/sqrt(pi).
/// For n_nodes == 1 this is the single node g0 with weight 1.
struct CouplingQuadrature {
  std::vector<double> couplings;
  std::vector<double> weights;
};

CouplingQuadrature coupling_quadrature(const EnsembleSpec& spec);

/// Normalized Gaussian average of f over g, fixed-order summation.
double gauss_average(const std::function<double(double)>& f, const EnsembleSpec& spec);

/// Pointwise average of the normalized Ramsey contrast over the coupling
/// distribution; p.g is replaced by each node. n_nodes == 1 reproduces the
/// single-pair series at g0.
TimeSeries averaged_contrast_series(const RadicalPairParams& p, const TimeGrid& grid,
                                    const EnsembleSpec& spec);

/// Phase-averaged triplet fraction 1 - Phi_S(t; phi) of the one-proton
/// analytic model, averaged over spec.n_samples draws of phi from a
/// mt19937_64 seeded with spec.seed. Throws if phi_model is none.
TimeSeries random_phase_triplet_series(double h, double omega, const TimeGrid& grid,
                                       const EnsembleSpec& spec);

/// Phases drawn for the ensemble (exposed for tests).
std::vector<double> draw_phases(const EnsembleSpec& spec);

}  // namespace rpsense
