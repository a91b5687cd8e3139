// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "rpsense/control.hpp"

#include <array>
#include <cmath>
#include <string>

#include "rpsense/detail/parallel.hpp"
#include "rpsense/error.hpp"
#include "rpsense/propagator.hpp"

namespace rpsense {

void PulseSequence::validate() const {
  for (const auto& ev : events) {
    if (const auto* f = std::get_if<FreeEvolution>(&ev)) {
      if (!std::isfinite(f->duration) || f->duration < 0.0) {
        throw InvalidArgument("PulseSequence: free evolution duration must be finite and >= 0");
      }
    } else {
      const auto& p = std::get<Pulse>(ev);
      if (!(p.angle > -2.0 * std::numbers::pi && p.angle <= 2.0 * std::numbers::pi)) {
        throw InvalidArgument("PulseSequence: pulse angle must lie in (-2 pi, 2 pi]");
      }
      if (!std::isfinite(p.phase)) throw InvalidArgument("PulseSequence: pulse phase must be finite");
    }
  }
}

double PulseSequence::total_duration() const {
  double t = 0.0;
  for (const auto& ev : events) {
    if (const auto* f = std::get_if<FreeEvolution>(&ev)) t += f->duration;
  }
  return t;
}

namespace {

// exp(i angle (cos a Jx + sin a Jy)) for a spin-1/2 (or pseudo spin-1/2).
Matrix rotation_2x2(double angle, double azimuth) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  const Complex i(0.0, 1.0);
  const Complex n_minus = std::exp(Complex(0.0, -azimuth));  // cos a - i sin a
  const Complex n_plus = std::exp(Complex(0.0, azimuth));
  Matrix r(2, 2);
  // exp(i theta n.sigma/2) = cos(theta/2) + i sin(theta/2) n.sigma
  r << c, i * s * n_minus, i * s * n_plus, c;
  return r;
}

double azimuth(const Pulse& p) { return (p.axis == PulseAxis::y ? 0.5 * std::numbers::pi : 0.0) + p.phase; }

Operator electron_rotation(const SystemLayout& layout, Slot slot, const Pulse& p) {
  return layout.embed(slot, Operator(rotation_2x2(p.angle, azimuth(p))));
}

Operator free_hamiltonian(const RadicalPairParams& p, const SequenceOptions& opts) {
  return opts.frozen_rp ? coupling_hamiltonian(p) : build_hamiltonian(p, true);
}

std::array<int, 2> subspace_rows(SensorSubspace s) {
  return {sensor_index(0), sensor_index(sensor_level(s))};
}

}  // namespace

Operator pulse_unitary(const Pulse& pulse, SensorSubspace subspace) {
  const auto layout = SystemLayout::with_sensor();
  switch (pulse.target) {
    case PulseTarget::sensor: {
      const Matrix r = rotation_2x2(pulse.angle, azimuth(pulse));
      Matrix s = Matrix::Identity(3, 3);
      const auto rows = subspace_rows(subspace);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) s(rows[a], rows[b]) = r(a, b);
      }
      return layout.embed(Slot::sensor, Operator(s));
    }
    case PulseTarget::electron_a:
      return electron_rotation(layout, Slot::electron_a, pulse);
    case PulseTarget::electron_b:
      return electron_rotation(layout, Slot::electron_b, pulse);
    case PulseTarget::both_electrons:
      return electron_rotation(layout, Slot::electron_a, pulse) *
             electron_rotation(layout, Slot::electron_b, pulse);
  }
  throw InvalidArgument("pulse_unitary: unknown target");
}

Operator sequence_unitary(const PulseSequence& seq, const RadicalPairParams& p,
                          const SequenceOptions& opts) {
  seq.validate();
  const Propagator prop(free_hamiltonian(p, opts));
  Operator u = Operator::identity(SystemLayout::with_sensor().dims());
  for (const auto& ev : seq.events) {
    const Operator step = std::holds_alternative<FreeEvolution>(ev)
                              ? prop.at(std::get<FreeEvolution>(ev).duration)
                              : pulse_unitary(std::get<Pulse>(ev), opts.subspace);
    u = step * u;
  }
  return u;
}

DensityMatrix apply_sequence(const PulseSequence& seq, const DensityMatrix& rho0,
                             const RadicalPairParams& p, const SequenceOptions& opts) {
  if (rho0.dim() != SystemLayout::with_sensor().dim()) {
    throw InvalidArgument("apply_sequence: initial state must live on the 24-dim sensor layout (got " +
                          std::to_string(rho0.dim()) + ")");
  }
  const Operator u = sequence_unitary(seq, p, opts);
  return DensityMatrix(u * rho0.op() * u.adjoint());
}

Operator restrict_to_sensor_subspace(const Operator& full, SensorSubspace subspace) {
  if (full.dim() != 24) throw InvalidArgument("restrict_to_sensor_subspace: expected a 24-dim operator");
  const auto rows = subspace_rows(subspace);
  Matrix out(16, 16);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) out.block(8 * a, 8 * b, 8, 8) = full.matrix().block(8 * rows[a], 8 * rows[b], 8, 8);
  }
  return Operator(std::move(out), {2, 2, 2, 2});
}

namespace {

void require_even_pulses(int m_pulses) {
  if (m_pulses < 0 || m_pulses % 2 != 0) {
    throw InvalidArgument("stroboscopic: m_pulses must be even and >= 0 (got " +
                          std::to_string(m_pulses) + ")");
  }
}

const Pulse kSensorPiX{PulseTarget::sensor, PulseAxis::x, std::numbers::pi, 0.0};

}  // namespace

Operator stroboscopic_closed_form(const RadicalPairParams& p, double tau, int m_pulses,
                                  SensorSubspace subspace) {
  require_even_pulses(m_pulses);
  if (m_pulses == 0) throw InvalidArgument("stroboscopic_closed_form: needs m_pulses >= 2");
  const Matrix u0 = propagator(branch_hamiltonian(p, 0), tau).matrix();
  const Matrix u1 = propagator(branch_hamiltonian(p, sensor_level(subspace)), tau).matrix();
  Matrix a = Matrix::Identity(8, 8);  // (U1 U0)^{M/2}
  Matrix b = Matrix::Identity(8, 8);  // (U0 U1)^{M/2}
  const Matrix u10 = u1 * u0;
  const Matrix u01 = u0 * u1;
  for (int k = 0; k < m_pulses / 2; ++k) {
    a = u10 * a;
    b = u01 * b;
  }
  Complex phase(1.0, 0.0);
  for (int k = 0; k < m_pulses - 1; ++k) phase *= Complex(0.0, 1.0);

  Matrix out = Matrix::Zero(16, 16);
  out.block(8, 0, 8, 8) = phase * a;  // |1><0|
  out.block(0, 8, 8, 8) = phase * b;  // |0><1|
  return Operator(std::move(out), {2, 2, 2, 2});
}

Operator stroboscopic_evolution(const RadicalPairParams& p, double tau, int m_pulses,
                                SensorSubspace subspace) {
  require_even_pulses(m_pulses);
  if (!std::isfinite(tau) || tau < 0.0) throw InvalidArgument("stroboscopic: tau must be >= 0");
  const Operator u = propagator(build_hamiltonian(p, true), tau);
  if (m_pulses == 0) return u;

  const Operator x = pulse_unitary(kSensorPiX, subspace);
  Operator v = u;
  for (int k = 1; k < m_pulses; ++k) v = u * x * v;

  const double dev = restrict_to_sensor_subspace(v, subspace)
                         .max_abs_diff(stroboscopic_closed_form(p, tau, m_pulses, subspace));
  if (dev > 1e-12) {
    throw Error("stroboscopic_evolution: literal product deviates from closed form by " +
                std::to_string(dev));
  }
  return v;
}

double controlled_yield(const RadicalPairParams& p, double tau, int m_pulses, SensorSubspace subspace) {
  require_even_pulses(m_pulses);
  if (!std::isfinite(tau) || tau < 0.0) throw InvalidArgument("controlled_yield: tau must be >= 0");
  const double k = p.kappa_tilde();
  if (!(k > 0.0)) throw InvalidArgument("controlled_yield: kappa + gamma must be > 0");

  const auto layout = SystemLayout::with_sensor();
  const Propagator prop(build_hamiltonian(p, true));
  const Operator proj = singlet_projector(layout);
  Operator rho = initial_full_state(p, {SensorState::zero, subspace}).op();

  if (m_pulses == 0) return laplace_average(expectation_signal(prop, rho, proj), k);

  const Operator step = pulse_unitary(kSensorPiX, subspace) * prop.at(tau);
  double total = 0.0;
  for (int seg = 0; seg + 1 < m_pulses; ++seg) {
    total += laplace_average(expectation_signal(prop, rho, proj), k, seg * tau, tau);
    rho = step * rho * step.adjoint();
  }
  total += laplace_average(expectation_signal(prop, rho, proj), k, (m_pulses - 1) * tau);
  return total;
}

std::vector<YieldPoint> controlled_yield_scan(const RadicalPairParams& p, const ScanRange& tau_range,
                                              int m_pulses, SensorSubspace subspace) {
  const auto taus = tau_range.values();
  return detail::parallel_map(taus.size(), [&](std::size_t i) {
    return YieldPoint{taus[i], controlled_yield(p, taus[i], m_pulses, subspace)};
  });
}

Vector two_electron_ket(RPStateLabel label) {
  Vector v = Vector::Zero(4);  // |uu>, |ud>, |du>, |dd>
  const double r = 1.0 / std::sqrt(2.0);
  switch (label) {
    case RPStateLabel::S:
      return singlet_ket();
    case RPStateLabel::T0:
      v(1) = r;
      v(2) = r;
      break;
    case RPStateLabel::Tplus:
      v(0) = 1.0;
      break;
    case RPStateLabel::Tminus:
      v(3) = 1.0;
      break;
  }
  return v;
}

namespace {

double teer_raw(const RadicalPairParams& p, const DensityMatrix& rho0, double tau, TeerVariant variant,
                const TeerOptions& opts) {
  const double rp_angle = variant == TeerVariant::pi ? std::numbers::pi : 0.5 * std::numbers::pi;
  PulseSequence seq;
  seq.pulse({PulseTarget::sensor, PulseAxis::x, 0.5 * std::numbers::pi, 0.0})
      .free(tau)
      .pulse({PulseTarget::sensor, PulseAxis::x, std::numbers::pi, 0.0})
      .pulse({PulseTarget::both_electrons, PulseAxis::x, rp_angle, 0.0})
      .free(tau)
      .pulse({PulseTarget::sensor, PulseAxis::x, 0.5 * std::numbers::pi, opts.readout_phase});

  const auto rho = apply_sequence(seq, rho0, p, {opts.frozen_rp, opts.subspace});
  const auto layout = SystemLayout::with_sensor();
  Matrix pop = Matrix::Zero(3, 3);
  pop(sensor_index(0), sensor_index(0)) = 1.0;
  pop(sensor_index(sensor_level(opts.subspace)), sensor_index(sensor_level(opts.subspace))) = -1.0;
  return rho.expectation(layout.embed(Slot::sensor, Operator(pop)));
}

}  // namespace

TimeSeries teer_contrast(const RadicalPairParams& p, RPStateLabel state, const ScanRange& tau_range,
                         TeerVariant variant, const TeerOptions& opts) {
  p.validate();
  if (std::abs(std::cos(opts.readout_phase)) < 1e-6) {
    throw InvalidArgument("teer_contrast: readout_phase leaves no signal at tau = 0");
  }
  if (tau_range.min < 0.0) throw InvalidArgument("teer_contrast: tau must be >= 0");

  const auto pair = DensityMatrix::pure(two_electron_ket(state), {2, 2});
  const auto rho0 = kron(sensor_density({SensorState::zero, opts.subspace}),
                         kron(pair, nuclear_state(p.nuclear_polarization)));
  const double reference = teer_raw(p, rho0, 0.0, variant, opts);

  TimeSeries out;
  out.times = tau_range.values();
  out.values = detail::parallel_map(out.times.size(), [&](std::size_t i) {
    return teer_raw(p, rho0, out.times[i], variant, opts) / reference;
  });
  return out;
}

std::vector<YieldPoint> toggle_field_nulling_scan(const RadicalPairParams& p,
                                                  const ScanRange& omega_range, int sensor_level_ms) {
  p.validate();
  const double k = p.kappa_tilde();
  if (!(k > 0.0)) throw InvalidArgument("toggle_field_nulling_scan: kappa + gamma must be > 0");
  SensorState prep = SensorState::minus_one;
  if (sensor_level_ms == 0) prep = SensorState::zero;
  else if (sensor_level_ms == 1) prep = SensorState::plus_one;
  else if (sensor_level_ms != -1) throw InvalidArgument("toggle_field_nulling_scan: sensor level must be -1, 0 or +1");

  const auto omegas = omega_range.values();
  const Operator proj = singlet_projector(SystemLayout::with_sensor());
  return detail::parallel_map(omegas.size(), [&](std::size_t i) {
    const auto q = p.with_omega(omegas[i]);
    const Propagator prop(build_hamiltonian(q, true));
    const auto rho = initial_full_state(q, {prep, SensorSubspace::minus});
    return YieldPoint{omegas[i], laplace_average(expectation_signal(prop, rho.op(), proj), k)};
  });
}

}  // namespace rpsense
