// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

#include "rpsense/dynamics.hpp"

namespace rpsense {

// The numeric trace is the reference; published closed forms are compared
// against it and any deviation above `tolerance` is reported rather than
// patched.

struct ClosedFormCheck {
  std::string name;
  RadicalPairParams params;
  double tolerance = 1e-8;
  double max_deviation = 0.0;   // worst |closed - numeric|
  double at_time = 0.0;         // where the worst deviation occurs (0 for yields)
  double closed_value = 0.0;    // at the worst point
  double numeric_value = 0.0;   // at the worst point
  /// Same comparison with the numeric side evaluated in the Pauli-operator
  /// convention (time 2t, or rate kappa~/2 for yields).
  double pauli_convention_deviation = 0.0;

  bool matches() const noexcept { return max_deviation <= tolerance; }
};

/// Closed-form Ramsey contrast vs 4 Re Tr[U0 rho U1^dagger] on `grid`.
ClosedFormCheck check_contrast_closed_form(const RadicalPairParams& p, const TimeGrid& grid,
                                           double tolerance = 1e-8);

/// Closed-form contrast yield vs the exact Laplace average of the numeric
/// raw contrast. A DomainError from the closed form is recorded as an
/// infinite deviation.
ClosedFormCheck check_contrast_yield_closed_form(const RadicalPairParams& p,
                                                 double tolerance = 1e-8);

/// Markdown report listing every check, with parameter point, deviation and
/// verdict.
std::string format_discrepancy_report(std::span<const ClosedFormCheck> checks);

}  // namespace rpsense
