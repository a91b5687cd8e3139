// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "rpsense/ensemble.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "rpsense/detail/parallel.hpp"
#include "rpsense/error.hpp"

namespace rpsense {

void EnsembleSpec::validate() const {
  if (!std::isfinite(g0)) throw InvalidArgument("EnsembleSpec.g0: must be finite");
  if (!(eta > 0.0)) throw InvalidArgument("EnsembleSpec.eta: must be > 0");
  if (n_nodes < 1 || n_nodes % 2 == 0) throw InvalidArgument("EnsembleSpec.n_nodes: must be odd and >= 1");
  if (std::isinf(eta) && n_nodes != 1) {
    throw InvalidArgument("EnsembleSpec.n_nodes: eta = inf (delta limit) needs a single node");
  }
  if (n_samples < 1) throw InvalidArgument("EnsembleSpec.n_samples: must be >= 1");
  if (phi_model.kind == PhaseModel::Kind::gaussian && !(phi_model.width >= 0.0)) {
    throw InvalidArgument("EnsembleSpec.phi_model: gaussian width must be >= 0");
  }
}

GaussHermiteRule gauss_hermite_rule(int n) {
  if (n < 1) throw InvalidArgument("gauss_hermite_rule: n must be >= 1");
  // Jacobi matrix of the physicists' Hermite recurrence: off-diagonal sqrt(k/2).
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(0.5 * k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Polish each eigenvalue with Newton steps on the orthonormal recurrence;
  // the weight then follows from w = 1 / (n p_{n-1}(x)^2), which stays
  // accurate for the small outer weights where eigenvector entries do not.
  const double p0 = std::pow(std::numbers::pi, -0.25);
  auto eval = [n, p0](double x, double& pn, double& pn1) {
    double prev = 0.0, cur = p0;
    for (int k = 0; k < n; ++k) {
      const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
      prev = cur;
      cur = next;
    }
    pn = cur;
    pn1 = prev;
  };
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    double pn = 0.0, pn1 = 0.0;
    for (int it = 0; it < 3; ++it) {
      eval(x, pn, pn1);
      x -= pn / (std::sqrt(2.0 * n) * pn1);
    }
    eval(x, pn, pn1);
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / (n * pn1 * pn1);
  }
  // exact symmetry about 0
  for (int i = 0; i < n / 2; ++i) {
    const double x = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[n - 1 - i] + rule.weights[i]);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

CouplingQuadrature coupling_quadrature(const EnsembleSpec& spec) {
  spec.validate();
  CouplingQuadrature q;
  if (spec.n_nodes == 1) {
    q.couplings = {spec.g0};
    q.weights = {1.0};
    return q;
  }
  const auto rule = gauss_hermite_rule(spec.n_nodes);
  const double scale = 1.0 / std::sqrt(spec.eta);
  const double norm = 1.0 / std::sqrt(std::numbers::pi);
  for (int i = 0; i < spec.n_nodes; ++i) {
    q.couplings.push_back(spec.g0 + scale * rule.nodes[i]);
    q.weights.push_back(norm * rule.weights[i]);
  }
  return q;
}

double gauss_average(const std::function<double(double)>& f, const EnsembleSpec& spec) {
  const auto q = coupling_quadrature(spec);
  double acc = 0.0;
  for (std::size_t i = 0; i < q.couplings.size(); ++i) acc += q.weights[i] * f(q.couplings[i]);
  return acc;
}

TimeSeries averaged_contrast_series(const RadicalPairParams& p, const TimeGrid& grid,
                                    const EnsembleSpec& spec) {
  const auto q = coupling_quadrature(spec);
  const auto per_node = detail::parallel_map(q.couplings.size(), [&](std::size_t i) {
    return sensor_contrast_numeric(p.with_g(q.couplings[i]), grid).normalized.values;
  });

  TimeSeries out;
  out.times = grid.times();
  out.values.assign(out.times.size(), 0.0);
  for (std::size_t i = 0; i < per_node.size(); ++i) {
    for (std::size_t t = 0; t < out.values.size(); ++t) out.values[t] += q.weights[i] * per_node[i][t];
  }
  return out;
}

std::vector<double> draw_phases(const EnsembleSpec& spec) {
  spec.validate();
  std::vector<double> phases(spec.n_samples, 0.0);
  if (spec.phi_model.kind == PhaseModel::Kind::none) return phases;

  // Explicit transforms rather than <random> distributions, whose output is
  // implementation-defined; this keeps files byte-identical across toolchains.
  std::mt19937_64 rng(spec.seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  constexpr double two_pi = 2.0 * std::numbers::pi;

  if (spec.phi_model.kind == PhaseModel::Kind::uniform) {
    for (auto& ph : phases) ph = two_pi * unit();
    return phases;
  }
  for (std::size_t i = 0; i < phases.size(); i += 2) {
    const double u1 = 1.0 - unit();  // (0, 1]
    const double u2 = unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    phases[i] = spec.phi_model.width * r * std::cos(two_pi * u2);
    if (i + 1 < phases.size()) phases[i + 1] = spec.phi_model.width * r * std::sin(two_pi * u2);
  }
  return phases;
}

TimeSeries random_phase_triplet_series(double h, double omega, const TimeGrid& grid,
                                       const EnsembleSpec& spec) {
  if (spec.phi_model.kind == PhaseModel::Kind::none) {
    throw InvalidArgument("random_phase_triplet_series: phi_model must not be none");
  }
  const auto phases = draw_phases(spec);
  double mean_cos = 0.0;
  double mean_sin = 0.0;
  for (double ph : phases) {
    mean_cos += std::cos(ph);
    mean_sin += std::sin(ph);
  }
  mean_cos /= static_cast<double>(phases.size());
  mean_sin /= static_cast<double>(phases.size());

  // Phi_S(t; phi) = K + cos(phi) A(t) - sin(phi) B(t) with
  //   K = [Phi_S(t;0) + Phi_S(t;pi)]/2, A = Phi_S(t;0) - K, B = K - Phi_S(t;pi/2),
  // so the sample mean only needs the mean of cos(phi) and sin(phi).
  TimeSeries out;
  out.times = grid.times();
  out.values.reserve(out.times.size());
  for (double t : out.times) {
    const double at0 = timmel_singlet_analytic(h, omega, t, 0.0);
    const double at_pi = timmel_singlet_analytic(h, omega, t, std::numbers::pi);
    const double at_half = timmel_singlet_analytic(h, omega, t, 0.5 * std::numbers::pi);
    const double k = 0.5 * (at0 + at_pi);
    const double mean = k + mean_cos * (at0 - k) + mean_sin * (at_half - k);
    out.values.push_back(1.0 - mean);
  }
  return out;
}

}  // namespace rpsense
