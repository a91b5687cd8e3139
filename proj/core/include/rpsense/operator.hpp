// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace rpsense {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense operator on a tensor-product Hilbert space.
///
/// The matrix is square and its dimension equals the product of
/// `subsystem_dims()`. Instances are immutable; arithmetic returns new
/// operators. Subsystem dimensions are carried through products and sums so
/// that partial traces can be taken later without a separate layout object.
class Operator {
 public:
  Operator() = default;

  /// Throws InvalidArgument if `m` is not square or the dims do not multiply
  /// out to its size.
  Operator(Matrix m, std::vector<int> subsystem_dims);

  /// Single-subsystem operator.
  explicit Operator(Matrix m);

  static Operator identity(std::vector<int> subsystem_dims);
  static Operator zero(std::vector<int> subsystem_dims);

  const Matrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  const std::vector<int>& subsystem_dims() const noexcept { return dims_; }

  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  Operator adjoint() const;
  Complex trace() const { return m_.trace(); }

  /// max |A - A^dagger| over all entries.
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }

  /// max |A_ij - B_ij|. Throws on dimension mismatch.
  double max_abs_diff(const Operator& other) const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, const Operator& a);
  friend Operator operator*(const Operator& a, Complex s) { return s * a; }

 private:
  Matrix m_;
  std::vector<int> dims_;
};

/// Validity flags of a density matrix, evaluated once at construction.
struct DensityValidity {
  bool hermitian = false;       // max|rho - rho^dagger| <= 1e-12
  bool unit_trace = false;      // |tr rho - 1| <= 1e-12
  bool positive = false;        // min eigenvalue >= -1e-10
  bool ok() const noexcept { return hermitian && unit_trace && positive; }
};

/// A validated quantum state. Construction throws InvalidArgument unless the
/// operator is Hermitian, has unit trace and is positive semidefinite to the
/// tolerances listed on DensityValidity.
class DensityMatrix {
 public:
  explicit DensityMatrix(Operator rho);

  /// |psi><psi| / <psi|psi> on the given layout.
  static DensityMatrix pure(const Vector& psi, std::vector<int> subsystem_dims);

  /// Checks the invariants without throwing.
  static DensityValidity check(const Operator& rho);

  const Operator& op() const noexcept { return rho_; }
  const Matrix& matrix() const noexcept { return rho_.matrix(); }
  Eigen::Index dim() const noexcept { return rho_.dim(); }
  const std::vector<int>& subsystem_dims() const noexcept { return rho_.subsystem_dims(); }

  /// Re tr(rho A).
  double expectation(const Operator& a) const;

 private:
  Operator rho_;
};

/// Tensor product; subsystem dims are concatenated.
Operator kron(const Operator& a, const Operator& b);
Operator kron(std::span<const Operator> factors);
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

struct SpinOperators {
  Operator x, y, z;
};

/// Angular-momentum matrices for multiplicity 2 (spin-1/2, eigenvalues +-1/2)
/// or 3 (spin-1, Sz = diag(+1, 0, -1)). Throws InvalidArgument otherwise.
SpinOperators spin_operators(int two_s_plus_1);

/// Reduced operator on the subsystems listed in `keep` (any order; the result
/// keeps them in ascending order). Throws InvalidArgument on an empty,
/// duplicated or out-of-range index set.
Operator partial_trace(const Operator& a, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Trace distance 1/2 ||a - b||_1 for Hermitian arguments.
double trace_distance(const Operator& a, const Operator& b);

}  // namespace rpsense
