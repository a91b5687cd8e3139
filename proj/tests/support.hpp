// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations used as test oracles. Nothing here
// calls into the eigendecomposition path of the library.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <complex>
#include <random>

#include "rpsense/operator.hpp"
#include "rpsense/spin_system.hpp"

namespace rpsense::testing {

inline Matrix expm_i(const Matrix& h, double t) {
  const Matrix a = Complex(0.0, t) * h;
  return a.exp();
}

inline Matrix random_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> d(0.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  }
  return m;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int n) {
  const Matrix m = random_matrix(rng, n);
  return 0.5 * (m + m.adjoint());
}

inline Matrix random_density(std::mt19937_64& rng, int n) {
  const Matrix m = random_matrix(rng, n);
  Matrix rho = m * m.adjoint();
  rho /= rho.trace();
  return rho;
}

inline RadicalPairParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RadicalPairParams p;
  p.h_a = 0.5 + u(rng);
  p.omega = -1.0 + 3.0 * u(rng);
  p.g = 0.5 * u(rng);
  p.kappa = 0.005 + 0.1 * u(rng);
  p.nuclear_polarization = -1.0 + 2.0 * u(rng);
  return p;
}

// Pauli-based spin-1/2 matrices built by hand.
inline Matrix sx() {
  Matrix m(2, 2);
  m << 0.0, 0.5, 0.5, 0.0;
  return m;
}
inline Matrix sy() {
  Matrix m(2, 2);
  m << 0.0, Complex(0.0, -0.5), Complex(0.0, 0.5), 0.0;
  return m;
}
inline Matrix sz() {
  Matrix m(2, 2);
  m << 0.5, 0.0, 0.0, -0.5;
  return m;
}

inline Matrix kron3(const Matrix& a, const Matrix& b, const Matrix& c) {
  const Matrix ab = Eigen::kroneckerProduct(a, b).eval();
  return Eigen::kroneckerProduct(ab, c).eval();
}

// Radical-pair Hamiltonian on electron_a (x) electron_b (x) nucleus, written
// out with Eigen's Kronecker product.
inline Matrix reference_rp_hamiltonian(double h, double omega) {
  const Matrix i2 = Matrix::Identity(2, 2);
  Matrix hf = kron3(sx(), i2, sx()) + kron3(sy(), i2, sy()) + kron3(sz(), i2, sz());
  Matrix zeeman = kron3(sz(), i2, i2) + kron3(i2, sz(), i2);
  return h * hf + omega * zeeman;
}

inline Vector singlet4() {
  Vector s = Vector::Zero(4);
  s(1) = 1.0 / std::sqrt(2.0);
  s(2) = -1.0 / std::sqrt(2.0);
  return s;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace rpsense::testing
