// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace berezin {

enum class OutputFormat { json, csv };

/// One partition-function evaluation compared against its oracle.
struct ResultRow {
  std::string route;
  double beta = 0.0;
  double omega = 0.0;
  std::optional<int> n_steps;  ///< absent for the exact operator route
  std::string bc;
  double z_value = 0.0;
  double reference_z = 0.0;
  double abs_error = 0.0;
};

inline ResultRow make_row(std::string route, double beta, double omega, std::optional<int> n_steps, std::string bc,
                          double z_value, double reference_z) {
  return {std::move(route), beta, omega, n_steps, std::move(bc), z_value, reference_z,
          std::abs(z_value - reference_z)};
}

inline constexpr const char* kCsvHeader = "route,beta,omega,n_steps,bc,z_value,reference_z,abs_error";

/// %.17g, enough digits to round-trip any double.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string emit(const std::vector<ResultRow>& rows, OutputFormat format) {
  if (rows.empty()) throw std::invalid_argument("emit: no rows");
  std::string out;
  if (format == OutputFormat::csv) {
    out += kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
      out += r.route + ',' + format_double(r.beta) + ',' + format_double(r.omega) + ',' +
             (r.n_steps ? std::to_string(*r.n_steps) : std::string{}) + ',' + r.bc + ',' +
             format_double(r.z_value) + ',' + format_double(r.reference_z) + ',' + format_double(r.abs_error) +
             '\n';
    }
    return out;
  }
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["route"] = r.route;
    j["beta"] = r.beta;
    j["omega"] = r.omega;
    j["n_steps"] = r.n_steps ? nlohmann::ordered_json(*r.n_steps) : nlohmann::ordered_json(nullptr);
    j["bc"] = r.bc;
    j["z_value"] = r.z_value;
    j["reference_z"] = r.reference_z;
    j["abs_error"] = r.abs_error;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace berezin
