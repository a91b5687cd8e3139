// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "rpsense/dynamics.hpp"
#include "rpsense/error.hpp"
#include "rpsense/planner.hpp"
#include "support.hpp"

namespace rpsense {
namespace {

using testing::max_abs;

// Independent P_S(t): Pade exponential of the hand-built Hamiltonian, then
// <S|Tr_I rho(t)|S> written out as a sum.
double reference_singlet(double h, double omega, double polarization, double t) {
  const Matrix u = testing::expm_i(testing::reference_rp_hamiltonian(h, omega), t);
  const Vector s = testing::singlet4();
  Matrix rho_i = Matrix::Zero(2, 2);
  rho_i.diagonal() << 0.5 * (1 + polarization), 0.5 * (1 - polarization);
  const Matrix rho0 = Eigen::kroneckerProduct(Matrix(s * s.adjoint()), rho_i).eval();
  const Matrix rho = u * rho0 * u.adjoint();
  double ps = 0.0;
  for (int n = 0; n < 2; ++n) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) ps += (std::conj(s(a)) * rho(2 * a + n, 2 * b + n) * s(b)).real();
    }
  }
  return ps;
}

double reference_contrast(const RadicalPairParams& p, int m, double t) {
  const Matrix u0 = testing::expm_i(testing::reference_rp_hamiltonian(p.h_a, p.omega), t);
  const Matrix u1 = testing::expm_i(testing::reference_rp_hamiltonian(p.h_a, p.omega + m * p.g), t);
  const Vector s = testing::singlet4();
  Matrix rho_i = Matrix::Zero(2, 2);
  rho_i.diagonal() << 0.5 * (1 + p.nuclear_polarization), 0.5 * (1 - p.nuclear_polarization);
  const Matrix rho0 = Eigen::kroneckerProduct(Matrix(s * s.adjoint()), rho_i).eval();
  return 4.0 * (u0 * rho0 * u1.adjoint()).trace().real();
}

TEST(TimeGrid, EndpointsAndValidation) {
  const TimeGrid g{0.0, 200.0, 2000};
  const auto t = g.times();
  ASSERT_EQ(t.size(), 2000u);
  EXPECT_EQ(t.front(), 0.0);
  EXPECT_EQ(t.back(), 200.0);
  EXPECT_THROW((TimeGrid{0.0, 1.0, 1}.validate()), InvalidArgument);
  EXPECT_THROW((TimeGrid{2.0, 1.0, 10}.validate()), InvalidArgument);
  EXPECT_THROW((ScanRange{0.0, 1.0, 0}.validate()), InvalidArgument);
  EXPECT_EQ((ScanRange{0.5, 1.0, 1}.values()), std::vector<double>{0.5});
}

TEST(SingletProbability, StartsInSinglet) {
  RadicalPairParams p;
  p.omega = 0.4;
  p.g = 0.1;
  const TimeGrid g{0.0, 10.0, 11};
  EXPECT_NEAR(singlet_probability_series(p, g, false).values[0], 1.0, 1e-14);
  EXPECT_NEAR(singlet_probability_series(p, g, true).values[0], 1.0, 1e-14);
}

TEST(SingletProbability, ZeroFieldClosedForm) {
  RadicalPairParams p;
  const TimeGrid g{0.0, 100.0, 1001};
  const auto ps = singlet_probability_series(p, g, false);
  double lowest = 1.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_NEAR(ps.values[i], 0.625 + 0.375 * std::cos(ps.times[i]), 1e-8);
    lowest = std::min(lowest, ps.values[i]);
  }
  EXPECT_NEAR(lowest, 0.25, 1e-4);
}

TEST(SingletProbability, MatchesPadeOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    auto p = testing::random_params(rng);
    const TimeGrid g{0.0, 30.0, 31};
    const auto ps = singlet_probability_series(p, g, false);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_NEAR(ps.values[i], reference_singlet(p.h_a, p.omega, p.nuclear_polarization, ps.times[i]), 1e-10);
    }
  }
}

TEST(SingletProbability, SensorInZeroLevelIsTheBarePair) {
  RadicalPairParams p;
  p.omega = 0.6;
  p.g = 0.2;
  const TimeGrid g{0.0, 40.0, 41};
  const auto bare = singlet_probability_series(p, g, false);
  const auto zero = singlet_probability_series(p, g, true, {SensorState::zero, SensorSubspace::plus});
  const auto plus = singlet_probability_series(p, g, true, {SensorState::plus_one, SensorSubspace::plus});
  const auto sup = singlet_probability_series(p, g, true, {SensorState::superposition, SensorSubspace::plus});
  for (std::size_t i = 0; i < g.times().size(); ++i) {
    const double t = bare.times[i];
    EXPECT_NEAR(zero.values[i], bare.values[i], 1e-12);
    EXPECT_NEAR(plus.values[i], reference_singlet(1.0, p.omega + p.g, 0.0, t), 1e-10);
    // The sensor is diagonal in H, so the superposition is the branch average.
    EXPECT_NEAR(sup.values[i], 0.5 * (zero.values[i] + plus.values[i]), 1e-12);
  }
}

TEST(Timmel, InitialValueAndZeroField) {
  for (double w : {0.0, 0.3, 1.0, 3.0}) EXPECT_NEAR(timmel_singlet_analytic(1.0, w, 0.0), 1.0, 1e-15);
  for (double t : {0.0, 0.7, 12.3}) {
    EXPECT_NEAR(timmel_singlet_analytic(1.0, 0.0, t), 0.625 + 0.375 * std::cos(t), 1e-15);
  }
  EXPECT_THROW(timmel_singlet_analytic(0.0, 1.0, 1.0), InvalidArgument);
}

TEST(Timmel, AgreesWithUnitaryEvolution) {
  for (double w : {0.0, 0.3, 1.0, 3.0}) {
    RadicalPairParams p;
    p.omega = w;
    const TimeGrid g{0.0, 100.0, 501};
    const auto ps = singlet_probability_series(p, g, false);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      EXPECT_NEAR(ps.values[i], timmel_singlet_analytic(1.0, w, ps.times[i]), 1e-8);
    }
  }
}

TEST(Timmel, PhysicalUnits) {
  const double h = 2.0 * std::numbers::pi * 14e6;
  const double w = 2.0 * planner::kElectronGyromagnetic * 50e-6;
  for (double t : {0.0, 1e-8, 3.3e-8, 1e-7, 4.2e-7}) {
    const double v = timmel_singlet_analytic(h, w, t);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    // Same point in h-units.
    EXPECT_NEAR(v, reference_singlet(1.0, w / h, 0.0, h * t), 1e-8);
  }
}

TEST(Contrast, InitialValueAndDecoupledSensor) {
  RadicalPairParams p;
  p.omega = 0.5;
  p.g = 0.0;
  const auto c = sensor_contrast_numeric(p, TimeGrid{0.0, 100.0, 201});
  for (double v : c.raw.values) EXPECT_NEAR(v, 4.0, 1e-12);
  p.g = 0.1;
  const auto c2 = sensor_contrast_numeric(p, TimeGrid{0.0, 100.0, 201});
  EXPECT_NEAR(c2.raw.values[0], 4.0, 1e-12);
  EXPECT_NEAR(c2.normalized.values[0], 1.0, 1e-12);
}

TEST(Contrast, MatchesPadeOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const auto p = testing::random_params(rng);
    for (auto sub : {SensorSubspace::plus, SensorSubspace::minus}) {
      const auto c = sensor_contrast_numeric(p, TimeGrid{0.0, 40.0, 21}, sub);
      for (std::size_t i = 0; i < c.raw.size(); ++i) {
        EXPECT_NEAR(c.raw.values[i], reference_contrast(p, sensor_level(sub), c.raw.times[i]), 1e-10);
      }
    }
  }
}

TEST(Contrast, SpectralSignalMatchesSeries) {
  RadicalPairParams p;
  p.omega = 0.7;
  p.g = 0.1;
  p.nuclear_polarization = 0.5;
  const auto sig = contrast_signal(p);
  const auto c = sensor_contrast_numeric(p, TimeGrid{0.0, 50.0, 51});
  for (std::size_t i = 0; i < c.raw.size(); ++i) EXPECT_NEAR(sig(c.raw.times[i]), c.raw.values[i], 1e-11);
  const auto s1 = singlet_signal(p, 1);
  for (double t : {0.0, 3.0, 17.0}) EXPECT_NEAR(s1(t), reference_singlet(1.0, 0.8, 0.5, t), 1e-11);
}

// Dominant frequency by projecting onto a comb of trial frequencies.
double dominant_frequency(const TimeSeries& s, double w_max, int n_trial) {
  double mean = 0.0;
  for (double v : s.values) mean += v;
  mean /= static_cast<double>(s.size());
  double best_w = 0.0, best_p = -1.0;
  for (int k = 1; k <= n_trial; ++k) {
    const double w = w_max * k / n_trial;
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < s.size(); ++i) acc += (s.values[i] - mean) * std::exp(Complex(0.0, -w * s.times[i]));
    if (std::abs(acc) > best_p) {
      best_p = std::abs(acc);
      best_w = w;
    }
  }
  return best_w;
}

TEST(Contrast, OscillatesOnTheCouplingScale) {
  RadicalPairParams p;
  p.g = 0.1;
  p.kappa = 0.01;
  p.omega = 0.5;
  const auto c = sensor_contrast_numeric(p, TimeGrid{0.0, 400.0, 4001});
  const double w = dominant_frequency(c.normalized, 2.0, 400);
  // Slow envelope set by g, far below the hyperfine frequency.
  EXPECT_LT(w, 3.0 * p.g);
}

TEST(FieldScan, LowFieldEffect) {
  RadicalPairParams p;
  p.g = 0.1;
  p.kappa = 0.01;
  const auto scan = field_scan(p, ScanRange{0.0, 1.0, 2});
  ASSERT_EQ(scan.size(), 2u);
  EXPECT_GT(std::abs(scan[0].singlet_yield - scan[1].singlet_yield), 0.01);
  for (const auto& pt : field_scan(p, ScanRange{0.0, 2.0, 41})) {
    EXPECT_GE(pt.singlet_yield, 0.0);
    EXPECT_LE(pt.singlet_yield, 1.0);
  }
}

TEST(FieldScan, DecoupledSensorIsSymmetricAndFlat) {
  RadicalPairParams p;
  p.g = 0.0;
  p.kappa = 0.05;
  const auto scan = field_scan(p, ScanRange{-1.5, 1.5, 31});
  for (std::size_t i = 0; i < scan.size(); ++i) {
    EXPECT_NEAR(scan[i].contrast_yield, 1.0, 1e-12);
    EXPECT_NEAR(scan[i].singlet_yield, scan[scan.size() - 1 - i].singlet_yield, 1e-10);
    const double branch0 = laplace_average(singlet_signal(p.with_omega(scan[i].omega), 0), 0.05);
    EXPECT_NEAR(scan[i].singlet_yield, branch0, 1e-12);
  }
}

TEST(FieldScan, YieldsMatchQuadratureRoute) {
  RadicalPairParams p;
  p.g = 0.1;
  p.kappa = 0.05;
  const auto scan = field_scan(p, ScanRange{0.2, 0.2, 1});
  const auto q = p.with_omega(0.2);
  const auto f0 = [&](double t) { return reference_singlet(1.0, 0.2, 0.0, t); };
  const auto f1 = [&](double t) { return reference_singlet(1.0, 0.3, 0.0, t); };
  QuadratureOptions opts;
  opts.abs_tol = 1e-9;
  const double y = 0.5 * (yield_with_recombination(f0, 0.05, opts) + yield_with_recombination(f1, 0.05, opts));
  EXPECT_NEAR(scan[0].singlet_yield, y, 1e-7);
  const auto sig = contrast_signal(q);
  EXPECT_NEAR(scan[0].contrast_yield, 0.25 * yield_with_recombination(sig, 0.05), 1e-8);
}

}  // namespace
}  // namespace rpsense
