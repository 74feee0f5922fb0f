// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oscillator.hpp
 * @brief Exact two-level operator model of the fermionic harmonic oscillator.
 *
 * Basis order is (|1>, |0>) throughout, so the number operator is diag(1, 0),
 * the unnormalized density matrix is diag(exp(-beta*omega), 1) and the parity
 * operator (-1)^N is diag(-1, 1).
 */

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace berezin::oscillator {

struct Matrix2 {
  std::array<std::array<double, 2>, 2> m{};

  static constexpr Matrix2 identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }
  static constexpr Matrix2 diag(double a, double b) { return {{{{a, 0.0}, {0.0, b}}}}; }

  constexpr double operator()(int i, int j) const { return m[i][j]; }

  constexpr double trace() const { return m[0][0] + m[1][1]; }
  constexpr bool is_diagonal() const { return m[0][1] == 0.0 && m[1][0] == 0.0; }

  friend constexpr Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
  }
  friend constexpr Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }
  friend constexpr Matrix2 operator*(double s, const Matrix2& a) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
  }
  friend constexpr bool operator==(const Matrix2&, const Matrix2&) = default;
};

struct LadderOperators {
  Matrix2 c_dagger;
  Matrix2 c;
};

/// c^dagger = sigma_+ and c = sigma_- in the (|1>, |0>) basis.
constexpr LadderOperators ladder_matrices() {
  return {Matrix2{{{{0.0, 1.0}, {0.0, 0.0}}}}, Matrix2{{{{0.0, 0.0}, {1.0, 0.0}}}}};
}

constexpr Matrix2 anticommutator(const Matrix2& a, const Matrix2& b) { return a * b + b * a; }

constexpr Matrix2 number_operator() {
  const auto [cd, c] = ladder_matrices();
  return cd * c;
}

constexpr Matrix2 parity_operator() { return Matrix2::diag(-1.0, 1.0); }

/// H = omega * c^dagger c.
inline Matrix2 hamiltonian(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("hamiltonian: omega must be > 0");
  return omega * number_operator();
}

/// Unnormalized exp(-beta H).
inline Matrix2 density_matrix(double beta, double omega) {
  if (!(beta >= 0.0) || std::isnan(beta)) throw std::invalid_argument("density_matrix: beta must be >= 0");
  const Matrix2 h = hamiltonian(omega);
  // H is diagonal in the occupation basis, so the exponential is entrywise.
  return Matrix2::diag(std::exp(-beta * h(0, 0)), std::exp(-beta * h(1, 1)));
}

inline double partition_trace(const Matrix2& rho) { return rho.trace(); }

/// Tr[(-1)^N rho].
inline double supertrace(const Matrix2& rho) { return (parity_operator() * rho).trace(); }

/// exp(-beta*omega): the propagating coefficient of the exact coherent-state kernel.
inline double exact_kernel_coefficient(double beta, double omega) {
  if (!(beta >= 0.0)) throw std::invalid_argument("exact_kernel_coefficient: beta must be >= 0");
  if (!(omega > 0.0)) throw std::invalid_argument("exact_kernel_coefficient: omega must be > 0");
  return std::exp(-beta * omega);
}

struct ThermalPoint {
  double beta = 0.0;
  double omega = 0.0;
  double z_minus = 0.0;  ///< antiperiodic closure, 1 + exp(-beta*omega)
  double z_plus = 0.0;   ///< periodic (graded) closure, 1 - exp(-beta*omega)
  double free_energy = 0.0;
  double mean_energy = 0.0;
  double entropy = 0.0;
};

/// Canonical-ensemble observables with k_B = hbar = 1.
inline ThermalPoint thermal_observables(double beta, double omega) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("thermal_observables: beta must be > 0");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw std::invalid_argument("thermal_observables: omega must be > 0");
  const Matrix2 rho = density_matrix(beta, omega);
  const double boltzmann = std::exp(-beta * omega);

  ThermalPoint p;
  p.beta = beta;
  p.omega = omega;
  p.z_minus = partition_trace(rho);
  p.z_plus = supertrace(rho);
  const double log_z = std::log1p(boltzmann);
  p.free_energy = -log_z / beta;
  p.mean_energy = omega * boltzmann / (1.0 + boltzmann);
  p.entropy = beta * p.mean_energy + log_z;
  return p;
}

}  // namespace berezin::oscillator
