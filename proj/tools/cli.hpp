// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "berezin/run.hpp"

namespace berezin::cli {

inline constexpr int kUsageError = 2;

/// Parses argv into a RunConfig and runs it. Exit codes: 0 ok, 1 selftest
/// breach, 2 invalid flags or values.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fermionic oscillator partition functions via Berezin path integrals", "berezin"};
  RunConfig config;
  std::string scheme = "exact";
  std::string bc = "both";
  std::string format = "json";

  app.add_option("--beta", config.betas, "inverse temperature (several values allowed for sweep)")
      ->expected(1, -1)
      ->default_str("1");
  app.add_option("--omega", config.omega, "oscillator frequency")->default_str("1");
  app.add_option("--steps", config.steps, "time slices N (ascending list for sweep)")->expected(1, -1);
  app.add_option("--scheme", scheme, "per-step coefficient")
      ->check(CLI::IsMember({"first-order", "exact"}))
      ->default_str("exact");
  app.add_option("--bc", bc, "boundary condition")
      ->check(CLI::IsMember({"antiperiodic", "periodic", "both"}))
      ->default_str("both");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}))->default_str("json");
  app.add_option("--tolerance", config.tolerance, "selftest route tolerance")->default_str("1e-10");
  app.add_flag("--allow-beta-zero", config.allow_beta_zero, "accept beta = 0 (partition functions only)");

  const std::map<std::string, Command> commands{
      {"exact", Command::exact},
      {"chain", Command::chain},
      {"determinant", Command::determinant},
      {"sweep", Command::sweep},
      {"selftest", Command::selftest},
  };
  const std::map<std::string, std::string> descriptions{
      {"exact", "two-level operator trace and supertrace"},
      {"chain", "symbolic contraction of the time-sliced chain, then boundary closure"},
      {"determinant", "determinant of the closed-chain action matrix"},
      {"sweep", "convergence of the determinant route over N"},
      {"selftest", "run the invariant suite"},
  };
  for (const auto& [name, desc] : descriptions) app.add_subcommand(name, desc)->fallthrough();
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  config.command = Command::chain;
  for (const auto* sub : app.get_subcommands()) config.command = commands.at(sub->get_name());
  config.scheme = scheme == "exact" ? path_integral::SliceScheme::exact : path_integral::SliceScheme::first_order;
  config.bc = bc == "antiperiodic" ? BcSelection::antiperiodic
              : bc == "periodic"   ? BcSelection::periodic
                                   : BcSelection::both;
  config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

  try {
    return run(config, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }
}

}  // namespace berezin::cli
