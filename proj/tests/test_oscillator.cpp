// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <cmath>

#include "berezin/oscillator.hpp"

using namespace berezin::oscillator;
using Catch::Approx;

TEST_CASE("ladder operators satisfy the canonical anticommutation relations", "[oscillator]") {
  const auto [cd, c] = ladder_matrices();
  CHECK(cd == Matrix2{{{{0.0, 1.0}, {0.0, 0.0}}}});
  CHECK(c == Matrix2{{{{0.0, 0.0}, {1.0, 0.0}}}});
  CHECK(anticommutator(c, cd) == Matrix2::identity());
  CHECK(c * c == Matrix2{});
  CHECK(cd * cd == Matrix2{});
  // Basis (|1>, |0>): the occupied state comes first.
  CHECK(cd * c == Matrix2::diag(1.0, 0.0));
  CHECK(number_operator() == Matrix2::diag(1.0, 0.0));
}

TEST_CASE("Hamiltonian spectrum", "[oscillator]") {
  const auto h1 = hamiltonian(1.0);
  CHECK(h1.is_diagonal());
  CHECK(h1 == Matrix2::diag(1.0, 0.0));
  CHECK(hamiltonian(2.0) == Matrix2::diag(2.0, 0.0));
  CHECK(hamiltonian(0.7).trace() == 0.7);
  CHECK_THROWS_AS(hamiltonian(0.0), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian(-1.0), std::invalid_argument);
}

TEST_CASE("density matrix", "[oscillator]") {
  CHECK(density_matrix(0.0, 1.0) == Matrix2::identity());
  CHECK(density_matrix(1e6, 1.0) == Matrix2::diag(0.0, 1.0));
  const auto rho = density_matrix(1.0, 1.0);
  CHECK(rho(0, 0) == Approx(0.36787944117144233).epsilon(1e-15));
  CHECK(rho(1, 1) == 1.0);
  CHECK(rho.is_diagonal());
  CHECK_THROWS_AS(density_matrix(-0.1, 1.0), std::invalid_argument);
}

TEST_CASE("trace and supertrace", "[oscillator]") {
  CHECK(partition_trace(density_matrix(0.0, 1.0)) == 2.0);
  CHECK(partition_trace(density_matrix(1.0, 1.0)) == Approx(1.3678794411714423).epsilon(1e-15));
  CHECK(partition_trace(density_matrix(1e6, 1.0)) == 1.0);

  CHECK(supertrace(density_matrix(0.0, 1.0)) == 0.0);
  CHECK(supertrace(density_matrix(1.0, 1.0)) == Approx(0.6321205588285577).epsilon(1e-15));
  CHECK(supertrace(density_matrix(1e6, 1.0)) == 1.0);

  for (double b : {0.1, 0.5, 1.0, 2.0, 5.0})
    for (double w : {0.5, 1.0, 2.0}) {
      const auto rho = density_matrix(b, w);
      CHECK(std::abs(partition_trace(rho) + supertrace(rho) - 2.0) <= 1e-14);
    }
}

TEST_CASE("density matrix commutes with H and forms a semigroup", "[oscillator]") {
  for (double w : {0.5, 1.0, 2.0})
    for (double b1 : {0.0, 0.3, 1.1})
      for (double b2 : {0.2, 0.9, 2.5}) {
        const auto h = hamiltonian(w);
        const auto rho = density_matrix(b1, w);
        CHECK(rho * h == h * rho);
        const auto joined = density_matrix(b1 + b2, w);
        const auto product = density_matrix(b1, w) * density_matrix(b2, w);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) CHECK(std::abs(joined(i, j) - product(i, j)) <= 1e-14);
      }
}

TEST_CASE("exact kernel coefficient", "[oscillator]") {
  CHECK(exact_kernel_coefficient(0.0, 1.0) == 1.0);
  CHECK(exact_kernel_coefficient(std::log(2.0), 1.0) == Approx(0.5).epsilon(1e-15));
  CHECK(exact_kernel_coefficient(1.0, 1.0) == Approx(0.36787944117144233).epsilon(1e-15));
}

TEST_CASE("thermal observables", "[oscillator]") {
  const auto p = thermal_observables(1.0, 1.0);
  CHECK(p.z_minus == Approx(1.3678794411714423));
  CHECK(p.z_plus == Approx(0.6321205588285577));
  CHECK(p.mean_energy == Approx(0.2689414213699951).epsilon(1e-14));
  CHECK(p.free_energy == Approx(-std::log(1.0 + std::exp(-1.0))));
  CHECK(p.entropy == Approx(p.beta * (p.mean_energy - p.free_energy)));

  const auto cold = thermal_observables(200.0, 1.0);
  CHECK(cold.mean_energy < 1e-80);
  CHECK(cold.entropy < 1e-80);
  const auto hot = thermal_observables(1e-4, 1.0);
  CHECK(std::abs(hot.entropy - std::log(2.0)) <= 1e-6);

  CHECK_THROWS_AS(thermal_observables(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(thermal_observables(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("mean energy is minus the beta-derivative of ln Z", "[oscillator]") {
  const double h = 1e-5;
  for (double b : {0.1, 0.5, 1.0, 2.0, 5.0})
    for (double w : {0.5, 1.0, 2.0}) {
      const double up = std::log(partition_trace(density_matrix(b + h, w)));
      const double down = std::log(partition_trace(density_matrix(b - h, w)));
      const auto p = thermal_observables(b, w);
      CHECK(std::abs(p.mean_energy + (up - down) / (2 * h)) <= 1e-8);
      CHECK(p.z_minus > 1.0);
      CHECK(p.z_minus < 2.0);
      CHECK(p.z_plus > 0.0);
      CHECK(p.z_plus < 1.0);
      CHECK(p.entropy >= 0.0);
    }
}
