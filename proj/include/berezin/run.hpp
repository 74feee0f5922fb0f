// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "berezin/oscillator.hpp"
#include "berezin/path_integral.hpp"
#include "berezin/report.hpp"
#include "berezin/selftest.hpp"

namespace berezin {

enum class Command { exact, chain, determinant, sweep, selftest };
enum class BcSelection { antiperiodic, periodic, both };

struct RunConfig {
  Command command = Command::exact;
  std::vector<double> betas{1.0};
  double omega = 1.0;
  std::vector<int> steps;  ///< empty: 16, or the default ladder for `sweep`
  path_integral::SliceScheme scheme = path_integral::SliceScheme::exact;
  BcSelection bc = BcSelection::both;
  OutputFormat format = OutputFormat::json;
  double tolerance = 1e-10;
  bool allow_beta_zero = false;
};

/// Invalid configuration; maps to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultSteps = 16;
inline const std::vector<int> kDefaultSweepSteps{2, 4, 8, 16, 32, 64};

inline std::vector<int> effective_steps(const RunConfig& config) {
  if (!config.steps.empty()) return config.steps;
  if (config.command == Command::sweep) return kDefaultSweepSteps;
  return {kDefaultSteps};
}

inline void validate(const RunConfig& config) {
  if (config.command == Command::selftest) {
    if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance))
      throw ConfigError("--tolerance must be finite and > 0");
    return;
  }
  if (config.betas.empty()) throw ConfigError("--beta is required");
  if (config.command != Command::sweep && config.betas.size() != 1)
    throw ConfigError("only `sweep` accepts several --beta values");
  for (double b : config.betas) {
    if (!std::isfinite(b) || b < 0.0) throw ConfigError("--beta must be finite and > 0");
    if (b == 0.0 && !config.allow_beta_zero)
      throw ConfigError("--beta must be > 0 (use --allow-beta-zero for partition functions only)");
  }
  if (!std::isfinite(config.omega) || !(config.omega > 0.0)) throw ConfigError("--omega must be finite and > 0");
  if (!(config.tolerance > 0.0) || !std::isfinite(config.tolerance))
    throw ConfigError("--tolerance must be finite and > 0");
  const auto steps = effective_steps(config);
  if (config.command != Command::sweep && steps.size() != 1)
    throw ConfigError("only `sweep` accepts several --steps values");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] < 1) throw ConfigError("--steps must be positive");
    if (i > 0 && steps[i] <= steps[i - 1]) throw ConfigError("--steps must be ascending for `sweep`");
  }
  if (config.command == Command::chain && steps.front() > path_integral::kMaxSymbolicSteps)
    throw ConfigError("`chain` supports at most " + std::to_string(path_integral::kMaxSymbolicSteps) + " steps");
}

inline std::vector<path_integral::BoundaryCondition> selected_bcs(BcSelection s) {
  using path_integral::BoundaryCondition;
  switch (s) {
    case BcSelection::antiperiodic: return {BoundaryCondition::antiperiodic};
    case BcSelection::periodic: return {BoundaryCondition::periodic};
    case BcSelection::both: break;
  }
  return {BoundaryCondition::antiperiodic, BoundaryCondition::periodic};
}

/// Operator-side reference: Tr rho (antiperiodic) or Str rho (periodic).
inline double oracle_partition(double beta, double omega, path_integral::BoundaryCondition bc) {
  const auto rho = oscillator::density_matrix(beta, omega);
  return bc == path_integral::BoundaryCondition::antiperiodic ? oscillator::partition_trace(rho)
                                                               : oscillator::supertrace(rho);
}

/// Rows for every command except `selftest`.
inline std::vector<ResultRow> compute_rows(const RunConfig& config) {
  using namespace path_integral;
  validate(config);
  const double w = config.omega;
  const auto bcs = selected_bcs(config.bc);
  const auto steps = effective_steps(config);
  std::vector<ResultRow> rows;

  switch (config.command) {
    case Command::exact: {
      const double b = config.betas.front();
      std::optional<oscillator::ThermalPoint> point;
      if (b > 0.0) point = oscillator::thermal_observables(b, w);
      for (auto bc : bcs) {
        double z = oracle_partition(b, w, bc);
        if (point) z = bc == BoundaryCondition::antiperiodic ? point->z_minus : point->z_plus;
        rows.push_back(make_row("exact", b, w, std::nullopt, std::string(to_string(bc)), z,
                                closed_form_partition(b, w, bc)));
      }
      break;
    }
    case Command::chain: {
      const double b = config.betas.front();
      const DiscretizedChain chain(steps.front(), b, w, config.scheme);
      const auto kernel = to_closed_form(contract_chain(chain));
      for (auto bc : bcs)
        rows.push_back(make_row("chain", b, w, chain.n_steps(), std::string(to_string(bc)),
                                close_boundary(kernel, bc), oracle_partition(b, w, bc)));
      break;
    }
    case Command::determinant: {
      const double b = config.betas.front();
      const DiscretizedChain chain(steps.front(), b, w, config.scheme);
      for (auto bc : bcs)
        rows.push_back(make_row("determinant", b, w, chain.n_steps(), std::string(to_string(bc)),
                                partition_via_determinant(chain, bc), oracle_partition(b, w, bc)));
      break;
    }
    case Command::sweep: {
      for (double b : config.betas)
        for (auto bc : bcs)
          for (const auto& r : convergence_sweep(b, w, steps, config.scheme, bc))
            rows.push_back(make_row("sweep", b, w, r.n_steps, std::string(to_string(bc)), r.z,
                                    closed_form_partition(b, w, bc)));
      break;
    }
    case Command::selftest: throw ConfigError("selftest produces no result rows");
  }
  return rows;
}

inline void emit_selftest(const selftest::Report& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) out << "check,passed,worst,bound\n";
  for (const auto& c : report.checks) {
    if (format == OutputFormat::csv) {
      out << c.name << ',' << (c.passed ? "true" : "false") << ',' << format_double(c.worst) << ','
          << format_double(c.bound) << '\n';
    } else {
      nlohmann::ordered_json j;
      j["check"] = c.name;
      j["passed"] = c.passed;
      j["worst"] = c.worst;
      j["bound"] = c.bound;
      out << j.dump() << '\n';
    }
  }
  if (format == OutputFormat::json) {
    nlohmann::ordered_json summary;
    summary["passed"] = report.passed();
    summary["failed"] = report.failed();
    out << summary.dump() << '\n';
  }
}

/// Executes one command, writing the table to `out`. Returns the exit status:
/// 0 on success, 1 when `selftest` finds a breach. Throws ConfigError on bad input.
inline int run(const RunConfig& config, std::ostream& out) {
  validate(config);
  if (config.command == Command::selftest) {
    const auto report = selftest::run_selftest(config.tolerance);
    emit_selftest(report, config.format, out);
    return report.ok() ? 0 : 1;
  }
  out << emit(compute_rows(config), config.format);
  return 0;
}

}  // namespace berezin
