// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "rpsense/propagator.hpp"

#include <algorithm>

#include "rpsense/error.hpp"

namespace rpsense {
namespace {

double inf_norm(const Matrix& m) { return m.cwiseAbs().rowwise().sum().maxCoeff(); }

}  // namespace

Propagator::Propagator(const Operator& h) : dims_(h.subsystem_dims()) {
  const double scale = std::max(1.0, inf_norm(h.matrix()));
  if (h.hermiticity_defect() > 1e-12 * scale) {
    throw InvalidArgument("propagator: Hamiltonian is not Hermitian");
  }
  const Matrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
  if (es.info() != Eigen::Success) throw Error("propagator: eigensolver did not converge");
  evals_ = es.eigenvalues();
  evecs_ = es.eigenvectors();

  const Matrix residual = sym * evecs_ - evecs_ * evals_.cast<Complex>().asDiagonal();
  if (inf_norm(residual) > 1e-11 * scale) {
    throw Error("propagator: eigendecomposition residual above tolerance");
  }
}

Operator Propagator::at(double t) const {
  const Eigen::VectorXcd phases =
      (Complex(0.0, t) * evals_.cast<Complex>()).array().exp().matrix();
  return Operator(evecs_ * phases.asDiagonal() * evecs_.adjoint(), dims_);
}

Operator propagator(const Operator& h, double t) { return Propagator(h).at(t); }

double unitarity_defect(const Operator& u) {
  const Matrix d = u.matrix().adjoint() * u.matrix() - Matrix::Identity(u.dim(), u.dim());
  return d.cwiseAbs().maxCoeff();
}

}  // namespace rpsense
