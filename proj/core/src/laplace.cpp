// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "rpsense/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rpsense/error.hpp"

namespace rpsense {
namespace {

void require_positive_rate(double kappa_tilde) {
  if (!(kappa_tilde > 0.0) || !std::isfinite(kappa_tilde)) {
    throw InvalidArgument("yield_with_recombination: kappa_tilde must be > 0");
  }
}

}  // namespace

QuadratureResult laplace_average_quadrature(const std::function<double(double)>& f,
                                            double kappa_tilde, const QuadratureOptions& opts) {
  require_positive_rate(kappa_tilde);
  using boost::math::quadrature::gauss_kronrod;

  // Crude max|f| from samples over the first 20 decay lengths.
  constexpr int kSamples = 513;
  double fmax = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double t = 20.0 / kappa_tilde * i / (kSamples - 1);
    fmax = std::max(fmax, std::abs(f(t)));
  }

  // Truncate where the neglected tail drops below both abs_tol and the
  // rounding level of the integral itself.
  const double tail_tol = std::min(opts.abs_tol, std::numeric_limits<double>::epsilon() * fmax);
  const double decay_lengths = fmax > 0.0 ? std::max(20.0, std::log(fmax / tail_tol)) : 20.0;
  QuadratureResult out;
  out.t_max = decay_lengths / kappa_tilde;
  out.tail_bound = std::exp(-decay_lengths) * fmax;

  const int panels = std::max(1, static_cast<int>(std::ceil(decay_lengths * opts.panels_per_decay)));
  const double width = out.t_max / panels;
  auto integrand = [&](double t) { return kappa_tilde * std::exp(-kappa_tilde * t) * f(t); };

  // fixed summation order keeps results bitwise reproducible
  for (int k = 0; k < panels; ++k) {
    const double a = k * width;
    const double b = (k + 1 == panels) ? out.t_max : a + width;
    double err = 0.0;
    out.value += gauss_kronrod<double, 31>::integrate(integrand, a, b, opts.max_depth,
                                                      opts.panel_rel_tol, &err);
    out.error_estimate += err;
  }
  return out;
}

double yield_with_recombination(const std::function<double(double)>& f, double kappa_tilde,
                                const QuadratureOptions& opts) {
  return laplace_average_quadrature(f, kappa_tilde, opts).value;
}

double yield_with_recombination(const SpectralSignal& f, double kappa_tilde,
                                const QuadratureOptions& opts) {
  return yield_with_recombination([&f](double t) { return f(t); }, kappa_tilde, opts);
}

double SpectralSignal::operator()(double t) const {
  double acc = 0.0;
  for (std::size_t k = 0; k < amplitudes.size(); ++k) {
    const double ph = frequencies[k] * t;
    acc += amplitudes[k].real() * std::cos(ph) - amplitudes[k].imag() * std::sin(ph);
  }
  return acc;
}

double SpectralSignal::amplitude_bound() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::abs(a);
  return s;
}

double laplace_average(const SpectralSignal& f, double kappa_tilde, double start, double length) {
  require_positive_rate(kappa_tilde);
  if (length < 0.0) throw InvalidArgument("laplace_average: negative length");
  const bool infinite = std::isinf(length);
  Complex acc(0.0, 0.0);
  for (std::size_t k = 0; k < f.amplitudes.size(); ++k) {
    const Complex denom(kappa_tilde, -f.frequencies[k]);  // kappa~ - i nu
    Complex window(1.0, 0.0);
    if (!infinite) window -= std::exp(Complex(-kappa_tilde * length, f.frequencies[k] * length));
    acc += f.amplitudes[k] * window / denom;
  }
  return kappa_tilde * std::exp(-kappa_tilde * start) * acc.real();
}

}  // namespace rpsense
