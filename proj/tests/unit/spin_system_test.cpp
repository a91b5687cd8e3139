// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "rpsense/error.hpp"
#include "rpsense/spin_system.hpp"
#include "support.hpp"

namespace rpsense {
namespace {

using testing::max_abs;

Matrix sensor_block(const Operator& h, int m) {
  const int i = sensor_index(m);
  return h.matrix().block(8 * i, 8 * i, 8, 8);
}

TEST(RadicalPairParams, ValidateNamesTheField) {
  RadicalPairParams p;
  p.h_a = 0.0;
  try {
    p.validate();
    FAIL() << "expected a throw";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("h_a"), std::string::npos);
  }
  p = {};
  p.kappa = -1.0;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.gamma = -1e-3;
  EXPECT_THROW(p.validate(), InvalidArgument);
  p = {};
  p.nuclear_polarization = 1.5;
  EXPECT_THROW(p.validate(), InvalidArgument);
}

TEST(RadicalPairParams, KappaTildeIsDerived) {
  RadicalPairParams p;
  p.kappa = 0.3;
  p.gamma = 0.2;
  EXPECT_DOUBLE_EQ(p.kappa_tilde(), 0.5);
  EXPECT_DOUBLE_EQ(p.with_omega(2.0).kappa_tilde(), 0.5);
}

TEST(SystemLayout, DimsAndEmbedding) {
  const auto full = SystemLayout::with_sensor();
  EXPECT_EQ(full.dims(), (std::vector<int>{3, 2, 2, 2}));
  EXPECT_EQ(full.dim(), 24);
  EXPECT_TRUE(full.has_sensor());
  EXPECT_FALSE(SystemLayout::radical_pair().has_sensor());
  const auto sz = full.embed(Slot::nucleus, spin_operators(2).z);
  Matrix ref = Eigen::kroneckerProduct(Matrix::Identity(12, 12), testing::sz()).eval();
  EXPECT_EQ(max_abs(sz.matrix() - ref), 0.0);
  EXPECT_THROW(SystemLayout::radical_pair().embed(Slot::sensor, spin_operators(3).z), InvalidArgument);
}

TEST(SensorIndex, OrderingPlusZeroMinus) {
  EXPECT_EQ(sensor_index(+1), 0);
  EXPECT_EQ(sensor_index(0), 1);
  EXPECT_EQ(sensor_index(-1), 2);
  EXPECT_THROW(sensor_index(2), InvalidArgument);
}

TEST(SingletProjector, RankIdempotenceOrthogonality) {
  for (const auto& layout : {SystemLayout::radical_pair(), SystemLayout::with_sensor()}) {
    const auto ps = singlet_projector(layout);
    const double other_dims = layout.dim() / 4.0;
    EXPECT_NEAR(ps.trace().real(), other_dims, 1e-12);
    EXPECT_LE((ps * ps).max_abs_diff(ps), 1e-12);
  }
  const auto ps = singlet_projector(SystemLayout::radical_pair());
  Vector t0 = Vector::Zero(4);
  t0(1) = t0(2) = 1.0 / std::sqrt(2.0);
  Vector up = Vector::Zero(2);
  up(0) = 1.0;
  const Vector t0_up = Eigen::kroneckerProduct(t0, up).eval();
  EXPECT_LE(std::abs(t0_up.dot(ps.matrix() * t0_up)), 1e-15);
  const Vector s_up = Eigen::kroneckerProduct(testing::singlet4(), up).eval();
  EXPECT_NEAR(s_up.dot(ps.matrix() * s_up).real(), 1.0, 1e-15);
}

TEST(Hamiltonian, MatchesHandBuiltKroneckerProducts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testing::random_params(rng);
    const auto h = build_hamiltonian(p, false);
    EXPECT_LE(max_abs(h.matrix() - testing::reference_rp_hamiltonian(p.h_a, p.omega)), 1e-14);
  }
}

TEST(Hamiltonian, DecoupledSensorGivesIdenticalBlocks) {
  RadicalPairParams p;
  p.omega = 0.37;
  p.g = 0.0;
  const auto h = build_hamiltonian(p, true);
  EXPECT_EQ(max_abs(sensor_block(h, +1) - sensor_block(h, 0)), 0.0);
  EXPECT_EQ(max_abs(sensor_block(h, -1) - sensor_block(h, 0)), 0.0);
}

TEST(Hamiltonian, SensorBlocksAreShiftedFields) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = testing::random_params(rng);
    const auto h = build_hamiltonian(p, true);
    EXPECT_TRUE(h.is_hermitian());
    for (int m : {-1, 0, 1}) {
      EXPECT_LE(max_abs(sensor_block(h, m) - branch_hamiltonian(p, m).matrix()), 1e-14);
      EXPECT_LE(max_abs(sensor_block(h, m) - testing::reference_rp_hamiltonian(p.h_a, p.omega + m * p.g)), 1e-14);
    }
    // Sensor is diagonal: off-diagonal sensor blocks vanish.
    EXPECT_EQ(max_abs(h.matrix().block(0, 8, 8, 16)), 0.0);
  }
}

TEST(Hamiltonian, ZeroFieldSpectrumFromIndependentDiagonalization) {
  RadicalPairParams p;
  const auto h = build_hamiltonian(p, false);
  Eigen::SelfAdjointEigenSolver<Matrix> ref(testing::reference_rp_hamiltonian(1.0, 0.0));
  Eigen::SelfAdjointEigenSolver<Matrix> got(h.matrix());
  EXPECT_LE((ref.eigenvalues() - got.eigenvalues()).cwiseAbs().maxCoeff(), 1e-12);
  // Electron A and the proton form a singlet (-3h/4) and triplet (+h/4);
  // electron B doubles each level.
  std::vector<double> ev(got.eigenvalues().data(), got.eigenvalues().data() + 8);
  std::sort(ev.begin(), ev.end());
  for (int i = 0; i < 2; ++i) EXPECT_NEAR(ev[i], -0.75, 1e-12);
  for (int i = 2; i < 8; ++i) EXPECT_NEAR(ev[i], 0.25, 1e-12);
}

TEST(Hamiltonian, CouplingOnlyTerm) {
  RadicalPairParams p;
  p.g = 0.3;
  p.omega = 5.0;
  const auto hc = coupling_hamiltonian(p);
  EXPECT_EQ(hc.dim(), 24);
  for (int m : {-1, 0, 1}) {
    const int i = sensor_index(m);
    const Matrix block = hc.matrix().block(8 * i, 8 * i, 8, 8);
    const Matrix i2 = Matrix::Identity(2, 2);
    const Matrix ref = m * p.g * (testing::kron3(testing::sz(), i2, i2) + testing::kron3(i2, testing::sz(), i2));
    EXPECT_LE(max_abs(block - ref), 1e-15);
  }
}

TEST(Hamiltonian, SecondHyperfineCouplingIsRejected) {
  RadicalPairParams p;
  p.h_b = 0.2;
  EXPECT_THROW(build_hamiltonian(p, false), InvalidArgument);
}

TEST(States, NuclearPolarizationAndInitialState) {
  const auto up = nuclear_state(1.0);
  EXPECT_NEAR(up.matrix()(0, 0).real(), 1.0, 1e-15);
  const auto thermal = nuclear_state(0.0);
  EXPECT_LE(max_abs(thermal.matrix() - 0.5 * Matrix::Identity(2, 2)), 1e-15);
  EXPECT_THROW(nuclear_state(-1.1), InvalidArgument);

  RadicalPairParams p;
  p.nuclear_polarization = 0.4;
  const auto rho = initial_radical_pair_state(p);
  EXPECT_EQ(rho.dim(), 8);
  EXPECT_NEAR(rho.expectation(singlet_projector(SystemLayout::radical_pair())), 1.0, 1e-14);
  const auto s = testing::singlet4();
  const Matrix ref = Eigen::kroneckerProduct(Matrix(s * s.adjoint()), nuclear_state(0.4).matrix()).eval();
  EXPECT_LE(max_abs(rho.matrix() - ref), 1e-15);
}

}  // namespace
}  // namespace rpsense
