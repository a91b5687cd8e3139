// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rpsense/ensemble.hpp"
#include "rpsense/error.hpp"

namespace rpsense {
namespace {

EnsembleSpec gaussian_spec(double g0, double eta, int nodes) {
  EnsembleSpec s;
  s.g0 = g0;
  s.eta = eta;
  s.n_nodes = nodes;
  return s;
}

// Dense trapezoid rule over +-12 standard deviations.
double trapezoid_average(const std::function<double(double)>& f, double g0, double eta) {
  const double sd = 1.0 / std::sqrt(2.0 * eta);
  const int n = 200000;
  const double a = g0 - 12 * sd, b = g0 + 12 * sd, h = (b - a) / n;
  double num = 0.0, den = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double g = a + i * h;
    const double w = (i == 0 || i == n ? 0.5 : 1.0) * std::exp(-eta * (g - g0) * (g - g0));
    num += w * f(g);
    den += w;
  }
  return num / den;
}

double tail_amplitude(const TimeSeries& s) {
  const auto mid = s.values.begin() + static_cast<std::ptrdiff_t>(s.size() / 2);
  const auto [lo, hi] = std::minmax_element(mid, s.values.end());
  return *hi - *lo;
}

TEST(GaussHermite, KnownSmallRules) {
  const auto r1 = gauss_hermite_rule(1);
  EXPECT_NEAR(r1.nodes[0], 0.0, 1e-15);
  EXPECT_NEAR(r1.weights[0], std::sqrt(std::numbers::pi), 1e-14);
  const auto r3 = gauss_hermite_rule(3);
  EXPECT_NEAR(r3.nodes[2], std::sqrt(1.5), 1e-13);
  EXPECT_NEAR(r3.nodes[0], -std::sqrt(1.5), 1e-13);
  EXPECT_NEAR(r3.weights[1], 2.0 * std::sqrt(std::numbers::pi) / 3.0, 1e-13);
  EXPECT_THROW(gauss_hermite_rule(0), InvalidArgument);
}

TEST(GaussHermite, ExactForPolynomialsUpToDegree2nMinus1) {
  for (int n : {5, 11, 21}) {
    const auto r = gauss_hermite_rule(n);
    EXPECT_TRUE(std::is_sorted(r.nodes.begin(), r.nodes.end()));
    for (int k = 0; k < 2 * n; k += 2) {
      double q = 0.0;
      for (int i = 0; i < n; ++i) q += r.weights[i] * std::pow(r.nodes[i], k);
      // integral x^k e^{-x^2} = Gamma((k+1)/2)
      EXPECT_NEAR(q / std::tgamma(0.5 * (k + 1)), 1.0, 1e-10) << "n " << n << " k " << k;
    }
  }
}

TEST(GaussAverage, Moments) {
  const auto s = gaussian_spec(0.1, 400.0, 11);
  EXPECT_NEAR(gauss_average([](double) { return 2.5; }, s), 2.5, 1e-12);
  EXPECT_NEAR(gauss_average([](double g) { return g; }, s), 0.1, 1e-10);
  const double second = gauss_average([](double g) { return g * g; }, s);
  EXPECT_NEAR(second, 0.01 + 1.0 / 800.0, 1e-8);
  EXPECT_NEAR(second, trapezoid_average([](double g) { return g * g; }, 0.1, 400.0), 1e-8);
}

TEST(GaussAverage, OscillatoryIntegrandAgainstTrapezoid) {
  const auto s = gaussian_spec(0.1, 100.0, 41);
  const auto f = [](double g) { return std::cos(30.0 * g); };
  EXPECT_NEAR(gauss_average(f, s), trapezoid_average(f, 0.1, 100.0), 1e-9);
}

TEST(EnsembleSpec, Validation) {
  EXPECT_THROW(gaussian_spec(0.1, 100.0, 4).validate(), InvalidArgument);
  EXPECT_THROW(gaussian_spec(0.1, std::numeric_limits<double>::infinity(), 3).validate(), InvalidArgument);
  EXPECT_THROW(gaussian_spec(0.1, -1.0, 3).validate(), InvalidArgument);
  EXPECT_NO_THROW(gaussian_spec(0.1, std::numeric_limits<double>::infinity(), 1).validate());
}

TEST(CouplingQuadrature, SingleNodeIsTheCentre) {
  const auto q = coupling_quadrature(gaussian_spec(0.25, std::numeric_limits<double>::infinity(), 1));
  ASSERT_EQ(q.couplings.size(), 1u);
  EXPECT_EQ(q.couplings[0], 0.25);
  EXPECT_EQ(q.weights[0], 1.0);
  const auto q5 = coupling_quadrature(gaussian_spec(0.25, 50.0, 5));
  EXPECT_NEAR(std::accumulate(q5.weights.begin(), q5.weights.end(), 0.0), 1.0, 1e-13);
}

TEST(AveragedContrast, DeltaLimitEqualsSinglePair) {
  RadicalPairParams p;
  p.omega = 0.5;
  const TimeGrid grid{0.0, 200.0, 401};
  const auto avg = averaged_contrast_series(p, grid, gaussian_spec(0.1, std::numeric_limits<double>::infinity(), 1));
  const auto single = sensor_contrast_numeric(p.with_g(0.1), grid);
  for (std::size_t i = 0; i < avg.size(); ++i) EXPECT_NEAR(avg.values[i], single.normalized.values[i], 1e-10);
}

TEST(AveragedContrast, DampingGrowsWithWidth) {
  RadicalPairParams p;
  p.omega = 0.5;
  const TimeGrid grid{0.0, 200.0, 1001};
  const double g0 = 0.1;
  std::vector<double> amps;
  for (double eta : {std::numeric_limits<double>::infinity(), 4.0 / (g0 * g0), 1.0 / (g0 * g0)}) {
    const int nodes = std::isinf(eta) ? 1 : 21;
    const auto s = averaged_contrast_series(p, grid, gaussian_spec(g0, eta, nodes));
    EXPECT_NEAR(s.values[0], 1.0, 1e-12);
    amps.push_back(tail_amplitude(s));
  }
  EXPECT_GT(amps[0], amps[1]);
  EXPECT_GT(amps[1], amps[2]);
}

TEST(RandomPhase, ZeroPhaseIsTheAnalyticTriplet) {
  EnsembleSpec s;
  s.phi_model = PhaseModel::gaussian(0.0);
  s.n_samples = 1;
  const TimeGrid grid{0.0, 20.0, 41};
  const auto tr = random_phase_triplet_series(1.0, 0.3, grid, s);
  for (std::size_t i = 0; i < tr.size(); ++i) {
    EXPECT_NEAR(tr.values[i], 1.0 - timmel_singlet_analytic(1.0, 0.3, tr.times[i]), 1e-14);
  }
}

TEST(RandomPhase, UniformPhaseAtZeroFieldAveragesOut) {
  EnsembleSpec s;
  s.phi_model = PhaseModel::uniform();
  s.n_samples = 100000;
  s.seed = 2026;
  const TimeGrid grid{0.0, 50.0, 26};
  const auto tr = random_phase_triplet_series(1.0, 0.0, grid, s);
  const double bound = 3.0 * 0.375 / std::sqrt(static_cast<double>(s.n_samples));
  for (std::size_t i = 0; i < tr.size(); ++i) EXPECT_NEAR(tr.values[i], 0.375, bound) << "t " << tr.times[i];
}

TEST(RandomPhase, ReproducibleUnderSeed) {
  EnsembleSpec s;
  s.n_samples = 64;
  s.seed = 17;
  EXPECT_EQ(draw_phases(s), draw_phases(s));
  const TimeGrid grid{0.0, 10.0, 11};
  EXPECT_EQ(random_phase_triplet_series(1.0, 0.4, grid, s).values, random_phase_triplet_series(1.0, 0.4, grid, s).values);
  auto other = s;
  other.seed = 18;
  EXPECT_NE(draw_phases(s), draw_phases(other));
  for (double phi : draw_phases(s)) {
    EXPECT_GE(phi, 0.0);
    EXPECT_LT(phi, 2.0 * std::numbers::pi);
  }
  s.phi_model = PhaseModel::none();
  EXPECT_THROW(random_phase_triplet_series(1.0, 0.4, grid, s), InvalidArgument);
}

}  // namespace
}  // namespace rpsense
