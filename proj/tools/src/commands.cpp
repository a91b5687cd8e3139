// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <limits>

#include "rpsense/error.hpp"

namespace rpsense::cli {

namespace {

class CsvWriter {
 public:
  explicit CsvWriter(std::initializer_list<std::string> header) { write_header(header); }
  explicit CsvWriter(const std::vector<std::string>& header) { write_header(header); }

  void row(std::initializer_list<double> values) { write_row(values.begin(), values.end()); }
  void row(const std::vector<double>& values) { write_row(values.begin(), values.end()); }

  std::string str() && { return std::move(text_); }

 private:
  template <typename Range>
  void write_header(const Range& header) {
    bool first = true;
    for (const auto& h : header) {
      if (!first) text_ += ',';
      text_ += h;
      first = false;
    }
    text_ += '\n';
  }

  template <typename It>
  void write_row(It begin, It end) {
    char buf[32];
    for (It it = begin; it != end; ++it) {
      if (it != begin) text_ += ',';
      std::snprintf(buf, sizeof buf, "%.15e", *it);
      text_ += buf;
    }
    text_ += '\n';
  }

  std::string text_;
};

std::string eta_label(double eta) {
  if (std::isinf(eta)) return "C_eta_inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "C_eta_%g", eta);
  return buf;
}

}  // namespace

std::string cmd_oscillations(const RunConfig& cfg) {
  const auto m = to_model(cfg);
  const auto ps = singlet_probability_series(m.params, m.time, true,
                                             {SensorState::superposition, cfg.subspace});
  const auto contrast = sensor_contrast_numeric(m.params, m.time, cfg.subspace);
  CsvWriter csv{"t", "P_S", "Phi_T", "C_norm"};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    csv.row({ps.times[i] * m.time_scale, ps.values[i], 1.0 - ps.values[i], contrast.normalized.values[i]});
  }
  return std::move(csv).str();
}

std::string cmd_field_scan(const RunConfig& cfg) {
  const auto m = to_model(cfg);
  CsvWriter csv{"omega", "Phi_S", "C_yield"};
  for (const auto& pt : field_scan(m.params, m.omega_range, cfg.subspace)) {
    csv.row({pt.omega * m.field_scale, pt.singlet_yield, pt.contrast_yield});
  }
  return std::move(csv).str();
}

std::string cmd_ensemble(const RunConfig& cfg) {
  const auto m = to_model(cfg);
  std::vector<std::string> header{"t"};
  std::vector<TimeSeries> columns;
  for (double eta : cfg.etas) {
    EnsembleSpec spec;
    spec.g0 = m.params.g;
    // eta is in inverse squared coupling units of the input.
    spec.eta = eta * cfg.ha * cfg.ha;
    spec.n_nodes = std::isinf(eta) ? 1 : cfg.n_nodes;
    spec.seed = cfg.seed;
    header.push_back(eta_label(eta));
    columns.push_back(averaged_contrast_series(m.params, m.time, spec));
  }
  if (cfg.phase_samples > 0) {
    EnsembleSpec spec;
    spec.g0 = m.params.g;
    spec.phi_model = PhaseModel::uniform();
    spec.n_samples = cfg.phase_samples;
    spec.seed = cfg.seed;
    header.emplace_back("Phi_T_avg");
    columns.push_back(random_phase_triplet_series(m.params.h_a, m.params.omega, m.time, spec));
  }
  CsvWriter csv(header);
  const auto times = m.time.times();
  std::vector<double> row(columns.size() + 1);
  for (std::size_t i = 0; i < times.size(); ++i) {
    row[0] = times[i] * m.time_scale;
    for (std::size_t c = 0; c < columns.size(); ++c) row[c + 1] = columns[c].values[i];
    csv.row(row);
  }
  return std::move(csv).str();
}

std::string cmd_teer(const RunConfig& cfg) {
  const auto m = to_model(cfg);
  TeerOptions opts;
  opts.frozen_rp = cfg.frozen_rp;
  opts.readout_phase = cfg.readout_phase;
  opts.subspace = cfg.subspace;
  std::vector<TimeSeries> cols;
  for (auto s : {RPStateLabel::S, RPStateLabel::T0, RPStateLabel::Tplus, RPStateLabel::Tminus}) {
    cols.push_back(teer_contrast(m.params, s, m.tau_range, cfg.variant, opts));
  }
  CsvWriter csv{"tau", "C_S", "C_T0", "C_Tplus", "C_Tminus"};
  for (std::size_t i = 0; i < cols[0].size(); ++i) {
    csv.row({cols[0].times[i] * m.time_scale, cols[0].values[i], cols[1].values[i], cols[2].values[i],
             cols[3].values[i]});
  }
  return std::move(csv).str();
}

std::string cmd_control(const RunConfig& cfg) {
  const auto m = to_model(cfg);
  if (cfg.mode == ControlMode::toggle) {
    CsvWriter csv{"omega", "Phi_S"};
    for (const auto& pt : toggle_field_nulling_scan(m.params, m.omega_range, cfg.sensor_level)) {
      csv.row({pt.x * m.field_scale, pt.singlet_yield});
    }
    return std::move(csv).str();
  }
  CsvWriter csv{"tau", "Phi_S"};
  for (const auto& pt : controlled_yield_scan(m.params, m.tau_range, cfg.m_pulses, cfg.subspace)) {
    csv.row({pt.x * m.time_scale, pt.singlet_yield});
  }
  return std::move(csv).str();
}

std::string cmd_planner(const RunConfig& cfg) {
  using namespace planner;
  const auto& e = cfg.experiment;
  e.validate();
  if (cfg.data_points < 1) throw InvalidArgument("data-points: must be >= 1");
  if (!(cfg.target_time > 0.0)) throw InvalidArgument("target-time: must be > 0");

  const double field = dipole_field(e);
  const double field_quoted_distance = dipole_field(e.moment, kQuotedDistance, e.angle);
  const double field_25nm = dipole_field(e.moment, 25e-9, e.angle);
  const auto reps = repetitions_for_snr(e);
  const double per_point = measurement_time(e);
  const double nominal_reps = 1e5;
  const double nominal_point = nominal_reps * e.shot_duration;
  const double total = per_point * cfg.data_points;
  const double nominal_total = nominal_point * cfg.data_points;

  std::string out;
  char buf[256];
  auto line = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof buf, fmt, args...);
    out += buf;
    out += '\n';
  };
  line("dipole_field_nT = %.6f  (distance %.3f nm, angle %.6f rad)", field * 1e9, e.distance * 1e9, e.angle);
  line("dipole_field_at_20nm_nT = %.6f  (quoted value %.1f nT)", field_quoted_distance * 1e9, kQuotedField * 1e9);
  line("dipole_field_at_25nm_nT = %.6f", field_25nm * 1e9);
  line("note: the quoted %.0f nT at %.0f nm does not follow from the point-dipole formula; "
       "it corresponds to a separation of about 25 nm",
       kQuotedField * 1e9, kQuotedDistance * 1e9);
  line("repetitions = %llu  (target SNR %.3g, single-shot SNR %.3g)", static_cast<unsigned long long>(reps),
       e.target_snr, e.single_shot_snr);
  line("time_per_point_s = %.6f", per_point);
  line("time_per_point_at_1e5_reps_s = %.6f", nominal_point);
  line("data_points = %d", cfg.data_points);
  line("total_time_h = %.6f", total / 3600.0);
  line("total_time_at_1e5_reps_h = %.6f", nominal_total / 3600.0);
  // The averaging-time estimate is quoted for an SNR of 1.
  auto unit_snr = e;
  unit_snr.target_snr = 1.0;
  line("time_to_snr1_at_quoted_field_s = %.6f  (efficiency %.4g)", time_to_snr(unit_snr, kQuotedField),
       e.efficiency);
  line("required_efficiency_for_snr1_in_%gs_at_quoted_field = %.6f", cfg.target_time,
       required_efficiency(unit_snr, kQuotedField, cfg.target_time));
  return out;
}

std::string run(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::oscillations:
      return cmd_oscillations(cfg);
    case Command::field_scan:
      return cmd_field_scan(cfg);
    case Command::ensemble:
      return cmd_ensemble(cfg);
    case Command::teer:
      return cmd_teer(cfg);
    case Command::control:
      return cmd_control(cfg);
    case Command::planner:
      return cmd_planner(cfg);
  }
  throw InvalidArgument("command: unknown");
}

}  // namespace rpsense::cli
