// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "rpsense/operator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "rpsense/error.hpp"

namespace rpsense {
namespace {

long dims_product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1L, std::multiplies<>());
}

void require_same_shape(const Operator& a, const Operator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

Operator::Operator(Matrix m, std::vector<int> subsystem_dims)
    : m_(std::move(m)), dims_(std::move(subsystem_dims)) {
  if (m_.rows() != m_.cols()) {
    throw InvalidArgument("Operator: matrix is not square");
  }
  if (dims_.empty() || std::any_of(dims_.begin(), dims_.end(), [](int d) { return d < 1; })) {
    throw InvalidArgument("Operator: subsystem dims must be positive");
  }
  if (dims_product(dims_) != m_.rows()) {
    throw InvalidArgument("Operator: product of subsystem dims (" +
                          std::to_string(dims_product(dims_)) + ") != matrix dim (" +
                          std::to_string(m_.rows()) + ")");
  }
}

Operator::Operator(Matrix m) : Operator(m, {static_cast<int>(m.rows())}) {}

Operator Operator::identity(std::vector<int> subsystem_dims) {
  const auto n = dims_product(subsystem_dims);
  return Operator(Matrix::Identity(n, n), std::move(subsystem_dims));
}

Operator Operator::zero(std::vector<int> subsystem_dims) {
  const auto n = dims_product(subsystem_dims);
  return Operator(Matrix::Zero(n, n), std::move(subsystem_dims));
}

Operator Operator::adjoint() const { return Operator(m_.adjoint(), dims_); }

double Operator::hermiticity_defect() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double Operator::max_abs_diff(const Operator& other) const {
  require_same_shape(*this, other, "max_abs_diff");
  return (m_ - other.m_).cwiseAbs().maxCoeff();
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "operator+");
  return Operator(a.m_ + b.m_, a.dims_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "operator-");
  return Operator(a.m_ - b.m_, a.dims_);
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "operator*");
  return Operator(a.m_ * b.m_, a.dims_);
}

Operator operator*(Complex s, const Operator& a) { return Operator(s * a.m_, a.dims_); }

// ---------------------------------------------------------------------------

DensityValidity DensityMatrix::check(const Operator& rho) {
  DensityValidity v;
  v.hermitian = rho.hermiticity_defect() <= 1e-12;
  v.unit_trace = std::abs(rho.trace() - Complex(1.0, 0.0)) <= 1e-12;
  if (v.hermitian) {
    const Matrix herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    v.positive = es.eigenvalues().minCoeff() >= -1e-10;
  }
  return v;
}

DensityMatrix::DensityMatrix(Operator rho) : rho_(std::move(rho)) {
  const auto v = check(rho_);
  if (!v.hermitian) throw InvalidArgument("DensityMatrix: not Hermitian");
  if (!v.unit_trace) throw InvalidArgument("DensityMatrix: trace != 1");
  if (!v.positive) throw InvalidArgument("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Vector& psi, std::vector<int> subsystem_dims) {
  const double norm2 = psi.squaredNorm();
  if (norm2 == 0.0) throw InvalidArgument("DensityMatrix::pure: zero vector");
  return DensityMatrix(Operator(psi * psi.adjoint() / norm2, std::move(subsystem_dims)));
}

double DensityMatrix::expectation(const Operator& a) const {
  if (a.dim() != dim()) throw InvalidArgument("expectation: dimension mismatch");
  // tr(rho A) = sum_ij rho_ij A_ji
  return (matrix().cwiseProduct(a.matrix().transpose())).sum().real();
}

// ---------------------------------------------------------------------------

Operator kron(const Operator& a, const Operator& b) {
  const Eigen::Index na = a.dim();
  const Eigen::Index nb = b.dim();
  Matrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.matrix();
    }
  }
  std::vector<int> dims = a.subsystem_dims();
  dims.insert(dims.end(), b.subsystem_dims().begin(), b.subsystem_dims().end());
  return Operator(std::move(out), std::move(dims));
}

Operator kron(std::span<const Operator> factors) {
  if (factors.empty()) throw InvalidArgument("kron: no factors");
  Operator out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(kron(a.op(), b.op()));
}

SpinOperators spin_operators(int two_s_plus_1) {
  const Complex i(0.0, 1.0);
  if (two_s_plus_1 == 2) {
    Matrix x(2, 2), y(2, 2), z(2, 2);
    x << 0.0, 0.5, 0.5, 0.0;
    y << 0.0, -0.5 * i, 0.5 * i, 0.0;
    z << 0.5, 0.0, 0.0, -0.5;
    return {Operator(x), Operator(y), Operator(z)};
  }
  if (two_s_plus_1 == 3) {
    // basis ordering m = +1, 0, -1
    const double r = 1.0 / std::sqrt(2.0);
    Matrix x(3, 3), y(3, 3), z(3, 3);
    x << 0.0, r, 0.0, r, 0.0, r, 0.0, r, 0.0;
    y << 0.0, -i * r, 0.0, i * r, 0.0, -i * r, 0.0, i * r, 0.0;
    z << 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0;
    return {Operator(x), Operator(y), Operator(z)};
  }
  throw InvalidArgument("spin_operators: unsupported multiplicity " +
                        std::to_string(two_s_plus_1) + " (expected 2 or 3)");
}

Operator partial_trace(const Operator& a, std::span<const int> keep) {
  const auto& dims = a.subsystem_dims();
  const int n = static_cast<int>(dims.size());
  if (keep.empty()) throw InvalidArgument("partial_trace: empty keep set");

  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) {
      throw InvalidArgument("partial_trace: subsystem index " + std::to_string(k) +
                            " out of range");
    }
    if (kept[k]) throw InvalidArgument("partial_trace: duplicate subsystem index");
    kept[k] = true;
  }

  // row-major strides of the full index
  std::vector<long> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  std::vector<int> kept_dims, traced_dims, kept_idx, traced_idx;
  for (int s = 0; s < n; ++s) {
    if (kept[s]) {
      kept_dims.push_back(dims[s]);
      kept_idx.push_back(s);
    } else {
      traced_dims.push_back(dims[s]);
      traced_idx.push_back(s);
    }
  }

  // offset in the full index of a multi-index over a subset of subsystems
  auto offsets = [&](const std::vector<int>& sub_dims, const std::vector<int>& sub_idx) {
    long total = std::accumulate(sub_dims.begin(), sub_dims.end(), 1L, std::multiplies<>());
    std::vector<long> off(total, 0);
    for (long flat = 0; flat < total; ++flat) {
      long rem = flat;
      long o = 0;
      for (int s = static_cast<int>(sub_dims.size()) - 1; s >= 0; --s) {
        o += (rem % sub_dims[s]) * stride[sub_idx[s]];
        rem /= sub_dims[s];
      }
      off[flat] = o;
    }
    return off;
  };

  const auto kept_off = offsets(kept_dims, kept_idx);
  const auto traced_off = traced_dims.empty() ? std::vector<long>{0}
                                              : offsets(traced_dims, traced_idx);

  const auto nk = static_cast<Eigen::Index>(kept_off.size());
  Matrix out = Matrix::Zero(nk, nk);
  const Matrix& m = a.matrix();
  for (Eigen::Index r = 0; r < nk; ++r) {
    for (Eigen::Index c = 0; c < nk; ++c) {
      Complex acc(0.0, 0.0);
      for (long t : traced_off) acc += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }
  }
  return Operator(std::move(out), std::move(kept_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  return DensityMatrix(partial_trace(rho.op(), keep));
}

double trace_distance(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "trace_distance");
  const Matrix d = a.matrix() - b.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (d + d.adjoint()), Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace rpsense
