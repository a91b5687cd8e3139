// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "rpsense/spin_system.hpp"

#include <cmath>
#include <string>

#include "rpsense/error.hpp"

namespace rpsense {

void RadicalPairParams::validate() const {
  auto bad = [](const char* field, const std::string& why) {
    throw InvalidArgument(std::string("RadicalPairParams.") + field + ": " + why);
  };
  auto finite = [&](double v, const char* field) {
    if (!std::isfinite(v)) bad(field, "must be finite");
  };
  finite(h_a, "h_a");
  finite(h_b, "h_b");
  finite(omega, "omega");
  finite(g, "g");
  finite(kappa, "kappa");
  finite(gamma, "gamma");
  finite(nuclear_polarization, "nuclear_polarization");
  if (!(h_a > 0.0)) bad("h_a", "must be > 0");
  if (kappa < 0.0) bad("kappa", "must be >= 0");
  if (gamma < 0.0) bad("gamma", "must be >= 0");
  if (std::abs(nuclear_polarization) > 1.0) bad("nuclear_polarization", "must lie in [-1, 1]");
}

SystemLayout::SystemLayout(std::vector<Slot> slots) : slots_(std::move(slots)) {
  if (slots_.empty()) throw InvalidArgument("SystemLayout: no slots");
}

SystemLayout SystemLayout::radical_pair() {
  return SystemLayout({Slot::electron_a, Slot::electron_b, Slot::nucleus});
}

SystemLayout SystemLayout::with_sensor() {
  return SystemLayout({Slot::sensor, Slot::electron_a, Slot::electron_b, Slot::nucleus});
}

std::vector<int> SystemLayout::dims() const {
  std::vector<int> d;
  d.reserve(slots_.size());
  for (Slot s : slots_) d.push_back(s == Slot::sensor ? 3 : 2);
  return d;
}

int SystemLayout::dim() const {
  int n = 1;
  for (int d : dims()) n *= d;
  return n;
}

std::optional<int> SystemLayout::index_of(Slot s) const {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] == s) return static_cast<int>(i);
  }
  return std::nullopt;
}

Operator SystemLayout::embed(Slot s, const Operator& local) const {
  const auto idx = index_of(s);
  if (!idx) throw InvalidArgument("SystemLayout::embed: slot not present in layout");
  const auto d = dims();
  if (local.dim() != d[*idx]) throw InvalidArgument("SystemLayout::embed: local dimension mismatch");
  std::vector<Operator> factors;
  factors.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    factors.push_back(static_cast<int>(i) == *idx ? local : Operator::identity({d[i]}));
  }
  return kron(factors);
}

int sensor_index(int m) {
  if (m < -1 || m > 1) throw InvalidArgument("sensor_index: m must be -1, 0 or +1");
  return 1 - m;
}

Vector singlet_ket() {
  Vector s = Vector::Zero(4);
  const double r = 1.0 / std::sqrt(2.0);
  s(1) = r;   // |ud>
  s(2) = -r;  // |du>
  return s;
}

Operator singlet_projector(const SystemLayout& layout) {
  const auto a = layout.index_of(Slot::electron_a);
  const auto b = layout.index_of(Slot::electron_b);
  if (!a || !b) throw InvalidArgument("singlet_projector: layout lacks an electron slot");
  if (*b != *a + 1) {
    throw InvalidArgument("singlet_projector: electron slots must be adjacent (A then B)");
  }
  const Vector s = singlet_ket();
  const Operator pair(s * s.adjoint(), {2, 2});

  const auto d = layout.dims();
  std::vector<Operator> factors;
  for (int i = 0; i < static_cast<int>(d.size()); ++i) {
    if (i == *a) {
      factors.push_back(pair);
      ++i;  // pair covers both electron slots
    } else {
      factors.push_back(Operator::identity({d[i]}));
    }
  }
  return kron(factors);
}

namespace {

// h_a I.S_A + field (S_Az + S_Bz) on an arbitrary layout containing both
// electrons and the nucleus.
Operator radical_pair_terms(const SystemLayout& layout, double h_a, double field) {
  const auto half = spin_operators(2);
  Operator h = h_a * (layout.embed(Slot::electron_a, half.x) * layout.embed(Slot::nucleus, half.x) +
                      layout.embed(Slot::electron_a, half.y) * layout.embed(Slot::nucleus, half.y) +
                      layout.embed(Slot::electron_a, half.z) * layout.embed(Slot::nucleus, half.z));
  return h + Complex(field) * (layout.embed(Slot::electron_a, half.z) +
                               layout.embed(Slot::electron_b, half.z));
}

void require_single_nucleus(const RadicalPairParams& p) {
  if (p.h_b != 0.0) {
    throw InvalidArgument("RadicalPairParams.h_b: nonzero h_b needs a second nucleus (unsupported)");
  }
}

}  // namespace

Operator build_hamiltonian(const RadicalPairParams& p, bool include_sensor) {
  p.validate();
  require_single_nucleus(p);
  if (!include_sensor) return radical_pair_terms(SystemLayout::radical_pair(), p.h_a, p.omega);
  return radical_pair_terms(SystemLayout::with_sensor(), p.h_a, p.omega) + coupling_hamiltonian(p);
}

Operator branch_hamiltonian(const RadicalPairParams& p, int m) {
  p.validate();
  require_single_nucleus(p);
  sensor_index(m);  // range check
  return radical_pair_terms(SystemLayout::radical_pair(), p.h_a, p.omega + m * p.g);
}

Operator coupling_hamiltonian(const RadicalPairParams& p) {
  const auto layout = SystemLayout::with_sensor();
  const auto half = spin_operators(2);
  const auto one = spin_operators(3);
  const Operator sz = layout.embed(Slot::sensor, one.z);
  return Complex(p.g) * (sz * (layout.embed(Slot::electron_a, half.z) +
                               layout.embed(Slot::electron_b, half.z)));
}

DensityMatrix nuclear_state(double polarization) {
  if (!(std::abs(polarization) <= 1.0)) {
    throw InvalidArgument("nuclear_state: polarization must lie in [-1, 1]");
  }
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 0.5 * (1.0 + polarization);
  m(1, 1) = 0.5 * (1.0 - polarization);
  return DensityMatrix(Operator(m));
}

DensityMatrix initial_radical_pair_state(const RadicalPairParams& p) {
  const auto singlet = DensityMatrix::pure(singlet_ket(), {2, 2});
  return kron(singlet, nuclear_state(p.nuclear_polarization));
}

}  // namespace rpsense
