// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "rpsense/dynamics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "rpsense/detail/parallel.hpp"
#include "rpsense/error.hpp"

namespace rpsense {

void TimeGrid::validate() const {
  if (!std::isfinite(t_start) || !std::isfinite(t_end)) {
    throw InvalidArgument("TimeGrid: bounds must be finite");
  }
  if (t_start < 0.0) throw InvalidArgument("TimeGrid.t_start: must be >= 0");
  if (!(t_end > t_start)) throw InvalidArgument("TimeGrid.t_end: must exceed t_start");
  if (n_points < 2) throw InvalidArgument("TimeGrid.n_points: must be >= 2");
}

std::vector<double> TimeGrid::times() const {
  validate();
  std::vector<double> t(n_points);
  const double step = (t_end - t_start) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) t[i] = t_start + i * step;
  t.back() = t_end;
  return t;
}

void TimeSeries::validate() const {
  if (times.size() != values.size()) throw InvalidArgument("TimeSeries: length mismatch");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw InvalidArgument("TimeSeries: times not increasing");
  }
}

void ScanRange::validate() const {
  if (!std::isfinite(min) || !std::isfinite(max)) throw InvalidArgument("ScanRange: bounds must be finite");
  if (steps < 1) throw InvalidArgument("ScanRange.steps: must be >= 1");
  if (steps > 1 && !(max > min)) throw InvalidArgument("ScanRange.max: must exceed min");
}

std::vector<double> ScanRange::values() const {
  validate();
  if (steps == 1) return {min};
  std::vector<double> v(steps);
  const double step = (max - min) / (steps - 1);
  for (int i = 0; i < steps; ++i) v[i] = min + i * step;
  v.back() = max;
  return v;
}

// ---------------------------------------------------------------------------

DensityMatrix sensor_density(const SensorPreparation& prep) {
  Vector psi = Vector::Zero(3);
  switch (prep.state) {
    case SensorState::zero:
      psi(sensor_index(0)) = 1.0;
      break;
    case SensorState::plus_one:
      psi(sensor_index(+1)) = 1.0;
      break;
    case SensorState::minus_one:
      psi(sensor_index(-1)) = 1.0;
      break;
    case SensorState::superposition:
      psi(sensor_index(0)) = 1.0 / std::sqrt(2.0);
      psi(sensor_index(sensor_level(prep.subspace))) = 1.0 / std::sqrt(2.0);
      break;
  }
  return DensityMatrix::pure(psi, {3});
}

DensityMatrix initial_full_state(const RadicalPairParams& p, const SensorPreparation& prep) {
  return kron(sensor_density(prep), initial_radical_pair_state(p));
}

namespace {

constexpr std::array<int, 3> kRadicalPairSlots = {1, 2, 3};
constexpr std::array<int, 2> kElectronSlotsWithSensor = {1, 2};
constexpr std::array<int, 2> kElectronSlots = {0, 1};

double singlet_population(const DensityMatrix& electrons) {
  const Vector s = singlet_ket();
  return (s.adjoint() * electrons.matrix() * s)(0, 0).real();
}

DensityMatrix evolve(const Propagator& prop, const DensityMatrix& rho, double t) {
  const Operator u = prop.at(t);
  return DensityMatrix(u * rho.op() * u.adjoint());
}

}  // namespace

DensityMatrix radical_pair_state_at(const RadicalPairParams& p, double t,
                                    const SensorPreparation& prep) {
  const Propagator prop(build_hamiltonian(p, true));
  return partial_trace(evolve(prop, initial_full_state(p, prep), t), kRadicalPairSlots);
}

TimeSeries singlet_probability_series(const RadicalPairParams& p, const TimeGrid& grid,
                                      bool with_sensor, const SensorPreparation& prep) {
  TimeSeries out;
  out.times = grid.times();
  const Propagator prop(build_hamiltonian(p, with_sensor));
  const DensityMatrix rho0 =
      with_sensor ? initial_full_state(p, prep) : initial_radical_pair_state(p);
  const std::span<const int> keep =
      with_sensor ? std::span<const int>(kElectronSlotsWithSensor) : std::span<const int>(kElectronSlots);

  out.values = detail::parallel_map(out.times.size(), [&](std::size_t i) {
    return singlet_population(partial_trace(evolve(prop, rho0, out.times[i]), keep));
  });
  return out;
}

double timmel_singlet_analytic(double h, double omega, double t, double phi) {
  if (!(h > 0.0)) throw InvalidArgument("timmel_singlet_analytic: h must be > 0");
  const double big = std::sqrt(h * h + omega * omega);
  const double static_tol = 1e-12 * h;
  auto f = [&](double x) { return std::abs(x) <= static_tol ? 1.0 : std::cos(x * t + phi); };
  const double r = omega / big;
  return 3.0 / 8.0 + omega * omega / (8.0 * big * big) + h * h / (8.0 * big * big) * f(big) +
         (1.0 - r) / 8.0 * (f(0.5 * (h + omega + big)) + f(0.5 * (h - omega - big))) +
         (1.0 + r) / 8.0 * (f(0.5 * (h - omega + big)) + f(0.5 * (h + omega - big)));
}

ContrastSeries sensor_contrast_numeric(const RadicalPairParams& p, const TimeGrid& grid,
                                       SensorSubspace subspace) {
  const Propagator u0(branch_hamiltonian(p, 0));
  const Propagator u1(branch_hamiltonian(p, sensor_level(subspace)));
  const Operator rho = initial_radical_pair_state(p).op();

  ContrastSeries out;
  out.raw.times = grid.times();
  out.raw.values = detail::parallel_map(out.raw.times.size(), [&](std::size_t i) {
    const double t = out.raw.times[i];
    return 4.0 * (u0.at(t) * rho * u1.at(t).adjoint()).trace().real();
  });
  const double raw0 = 4.0 * rho.trace().real();  // value at t = 0
  out.normalized.times = out.raw.times;
  out.normalized.values.reserve(out.raw.size());
  for (double v : out.raw.values) out.normalized.values.push_back(v / raw0);
  return out;
}

ClosedFormFrequencies ClosedFormFrequencies::from(const RadicalPairParams& p) {
  return {std::hypot(p.h_a, p.omega), std::hypot(p.h_a, p.omega + p.g)};
}

double sensor_contrast_closed_form(const RadicalPairParams& p, double t) {
  p.validate();
  const auto [o1, o2] = ClosedFormFrequencies::from(p);
  const double g = p.g;
  const double w = p.omega;
  const double bracket =
      std::sin(t * o1) * (2.0 * (o1 * o1 + g * w) * std::cos(g * t) * std::sin(t * o2) -
                          2.0 * w * o2 * std::sin(g * t) * std::cos(t * o2)) +
      o1 * std::cos(t * o1) * (2.0 * (g + w) * std::sin(g * t) * std::sin(t * o2) +
                               2.0 * o2 * std::cos(g * t) * std::cos(t * o2)) +
      2.0 * o1 * o2;
  return bracket / (o1 * o2);
}

double contrast_yield_closed_form(const RadicalPairParams& p) {
  p.validate();
  const double k = p.kappa_tilde();
  if (!(k > 0.0)) throw InvalidArgument("contrast_yield_closed_form: kappa~ must be > 0");
  const auto [o1, o2] = ClosedFormFrequencies::from(p);
  const double g = p.g;
  const double w = p.omega;
  const double h = p.h_a;
  const double k2 = k * k;

  const double d1 = 2.0 * o2 * o2 * (k2 - g * g) + (g * g + k2) * (g * g + k2) + o2 * o2;
  const double d1_scale = 2.0 * o2 * o2 * (k2 + g * g) + (g * g + k2) * (g * g + k2) + o2 * o2;
  if (std::abs(d1) <= 1e-14 * d1_scale) {
    throw DomainError("2*Omega2^2*(kappa~^2-g^2)+(g^2+kappa~^2)^2+Omega2^2",
                      "contrast_yield_closed_form: denominator vanishes");
  }
  const double d2 = ((g - o2) * (g - o2) + k2) * ((g + o2) * (g + o2) + k2);
  auto lorentz = [&](double x) { return k / (x * x + k2); };

  const double first = k * o1 *
                       (4.0 * g * k * o2 * (g + w) / d1 + 2.0 * k * o2 * (g * g + k2 + o2 * o2) / d2) /
                       (h * h + k2 + w * w);
  const double la = lorentz(-g + o1 - o2);
  const double lb = lorentz(g + o1 - o2);
  const double lc = lorentz(-g + o1 + o2);
  const double ld = lorentz(g + o1 + o2);
  const double second = (la + lb - lc - ld) * (h * h + w * (g + w)) / 8.0;
  const double third = -w * o2 * (la - lb + lc - ld) / 8.0;
  return 2.0 + (first + second + third) / (o1 * o2);
}

// ---------------------------------------------------------------------------

SpectralSignal expectation_signal(const Propagator& h, const Operator& rho, const Operator& a) {
  const Matrix& v = h.eigenvectors();
  const Eigen::VectorXd& e = h.eigenvalues();
  const Matrix rt = v.adjoint() * rho.matrix() * v;
  const Matrix at = v.adjoint() * a.matrix() * v;
  const Eigen::Index n = e.size();
  SpectralSignal s;
  s.amplitudes.reserve(n * n);
  s.frequencies.reserve(n * n);
  // Tr[A V e^{iEt} rt e^{-iEt} V^dagger] = sum_jk at_kj rt_jk e^{i(E_j - E_k) t}
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex amp = at(k, j) * rt(j, k);
      if (std::abs(amp) == 0.0) continue;
      s.amplitudes.push_back(amp);
      s.frequencies.push_back(e(j) - e(k));
    }
  }
  return s;
}

SpectralSignal singlet_signal(const RadicalPairParams& p, int m) {
  const Propagator prop(branch_hamiltonian(p, m));
  return expectation_signal(prop, initial_radical_pair_state(p).op(),
                            singlet_projector(SystemLayout::radical_pair()));
}

SpectralSignal contrast_signal(const RadicalPairParams& p, SensorSubspace subspace) {
  const Propagator h0(branch_hamiltonian(p, 0));
  const Propagator h1(branch_hamiltonian(p, sensor_level(subspace)));
  const Matrix& v0 = h0.eigenvectors();
  const Matrix& v1 = h1.eigenvectors();
  const Matrix left = v0.adjoint() * initial_radical_pair_state(p).matrix() * v1;
  const Matrix right = v1.adjoint() * v0;
  const Eigen::Index n = v0.rows();
  SpectralSignal s;
  // Tr[V0 e^{iE0 t} V0^dag rho V1 e^{-iE1 t} V1^dag]
  //   = sum_jk left_jk right_kj e^{i(E0_j - E1_k) t}
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex amp = 4.0 * left(j, k) * right(k, j);
      if (std::abs(amp) == 0.0) continue;
      s.amplitudes.push_back(amp);
      s.frequencies.push_back(h0.eigenvalues()(j) - h1.eigenvalues()(k));
    }
  }
  return s;
}

std::vector<FieldScanPoint> field_scan(const RadicalPairParams& p, const ScanRange& omega_range,
                                       SensorSubspace subspace) {
  p.validate();
  const double k = p.kappa_tilde();
  if (!(k > 0.0)) throw InvalidArgument("field_scan: kappa + gamma must be > 0");
  const auto omegas = omega_range.values();
  const int m = sensor_level(subspace);
  return detail::parallel_map(omegas.size(), [&](std::size_t i) {
    const auto q = p.with_omega(omegas[i]);
    FieldScanPoint pt;
    pt.omega = omegas[i];
    pt.singlet_yield =
        0.5 * (laplace_average(singlet_signal(q, 0), k) + laplace_average(singlet_signal(q, m), k));
    pt.contrast_yield = laplace_average(contrast_signal(q, subspace), k) / 4.0;
    return pt;
  });
}

}  // namespace rpsense
