// Copyright 2026 The rpsense Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "rpsense/error.hpp"

namespace {

// Errors are reported as a single line: "rpsense: error: <kind>: <message>".
int fail(const char* kind, const std::string& message) {
  std::string flat = message;
  for (char& c : flat) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  std::fprintf(stderr, "rpsense: error: %s: %s\n", kind, flat.c_str());
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  rpsense::cli::RunConfig cfg;
  try {
    std::string help;
    if (!rpsense::cli::parse_command_line(argc, argv, cfg, help)) {
      std::cout << help;
      return 0;
    }
    const std::string output = rpsense::cli::run(cfg);
    if (cfg.out.empty()) {
      std::cout << output;
      std::cout.flush();
      return std::cout ? 0 : fail("io", "failed writing to stdout");
    }
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) return fail("io", "cannot open output file '" + cfg.out + "'");
    file << output;
    if (!file.flush()) return fail("io", "failed writing '" + cfg.out + "'");
  } catch (const rpsense::DomainError& e) {
    return fail("domain", e.what());
  } catch (const rpsense::InvalidArgument& e) {
    return fail("invalid_argument", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
  return 0;
}
