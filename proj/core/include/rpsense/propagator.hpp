// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "rpsense/operator.hpp"

namespace rpsense {

/// Cached Hermitian eigendecomposition H = V diag(lambda) V^dagger, giving
/// U(t) = exp(+i H t) for any t at the cost of one matrix product.
///
/// The sign follows U_0 = e^{i H_0 t}; every unitary in the library (pulses
/// included) uses the same +i convention. The input is symmetrized before the
/// solve and the residual ||HV - V Lambda||_inf is checked against
/// 1e-11 * max(1, ||H||_inf).
class Propagator {
 public:
  /// Throws InvalidArgument if `h` is not Hermitian to 1e-12 (relative to its
  /// norm) or the eigensolve residual check fails.
  explicit Propagator(const Operator& h);

  Operator at(double t) const;

  const Eigen::VectorXd& eigenvalues() const noexcept { return evals_; }
  const Matrix& eigenvectors() const noexcept { return evecs_; }
  const std::vector<int>& subsystem_dims() const noexcept { return dims_; }

 private:
  Eigen::VectorXd evals_;
  Matrix evecs_;
  std::vector<int> dims_;
};

/// One-shot exp(+i H t).
Operator propagator(const Operator& h, double t);

/// max |U^dagger U - 1|.
double unitarity_defect(const Operator& u);

}  // namespace rpsense
