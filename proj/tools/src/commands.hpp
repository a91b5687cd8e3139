// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "config.hpp"

namespace rpsense::cli {

// Each command returns its complete output: CSV with one header row for the
// simulations, a plain-text report for the planner.
std::string cmd_oscillations(const RunConfig& cfg);
std::string cmd_field_scan(const RunConfig& cfg);
std::string cmd_ensemble(const RunConfig& cfg);
std::string cmd_teer(const RunConfig& cfg);
std::string cmd_control(const RunConfig& cfg);
std::string cmd_planner(const RunConfig& cfg);

std::string run(const RunConfig& cfg);

}  // namespace rpsense::cli
