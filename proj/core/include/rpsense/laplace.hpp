// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "rpsense/operator.hpp"

namespace rpsense {

// Recombination weighting. A time-dependent quantity f(t) is turned into a
// yield by the normalized Laplace average
//
//   Y(kappa~) = kappa~ * integral_0^inf f(t) exp(-kappa~ t) dt,
//
// so that constants map to themselves and Y -> f(0) as kappa~ -> inf.

struct QuadratureOptions {
  double abs_tol = 1e-11;
  int max_depth = 12;
  /// Relative tolerance handed to each adaptive panel.
  double panel_rel_tol = 1e-12;
  /// Panels per decay length 1/kappa~.
  int panels_per_decay = 4;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of per-panel Gauss-Kronrod estimates
  double tail_bound = 0.0;      // exp(-kappa~ T_max) * max|f| (sampled)
  double t_max = 0.0;
};

/// Adaptive composite Gauss-Kronrod evaluation on [0, T_max] plus a bound on
/// the truncated tail. T_max = max(20, ln(max|f| / tail_tol)) / kappa~ with
/// tail_tol = min(abs_tol, eps * max|f|).
/// Throws InvalidArgument unless kappa_tilde > 0.
QuadratureResult laplace_average_quadrature(const std::function<double(double)>& f,
                                            double kappa_tilde,
                                            const QuadratureOptions& opts = {});

double yield_with_recombination(const std::function<double(double)>& f, double kappa_tilde,
                                const QuadratureOptions& opts = {});

/// f(t) = Re sum_k a_k exp(i nu_k t). Every observable of a finite-dimensional
/// closed system has this form, which makes its Laplace average exact.
struct SpectralSignal {
  std::vector<Complex> amplitudes;
  std::vector<double> frequencies;

  double operator()(double t) const;
  /// sum_k |a_k|, an upper bound on |f|.
  double amplitude_bound() const;
};

/// Exact kappa~ * integral_start^{start+length} exp(-kappa~ t) f(t - start) dt.
/// `length` may be infinite.
double laplace_average(const SpectralSignal& f, double kappa_tilde, double start = 0.0,
                       double length = std::numeric_limits<double>::infinity());

/// Overload of the quadrature route for spectral signals (cross-checks).
double yield_with_recombination(const SpectralSignal& f, double kappa_tilde,
                                const QuadratureOptions& opts = {});

}  // namespace rpsense
