// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file selftest.hpp
 * @brief Runtime invariant suite behind `berezin selftest`.
 *
 * Each check is deterministic (fixed seeds) and reports the worst deviation it
 * observed. Checks whose natural tolerance is the route tolerance use the
 * caller-supplied tolerance; the others keep their own tighter bounds.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "berezin/calculus.hpp"
#include "berezin/gaussian.hpp"
#include "berezin/oscillator.hpp"
#include "berezin/path_integral.hpp"
#include "berezin/report.hpp"

namespace berezin::selftest {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;   ///< largest observed deviation
  double bound = 0.0;   ///< tolerance it was held to
};

struct Report {
  std::vector<CheckResult> checks;

  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
  }
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

namespace detail {

inline GrassmannElement random_element(const RegistryPtr& reg, std::mt19937_64& rng, bool constant_term) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> term_count(1, 6);
  std::uniform_int_distribution<std::uint64_t> subset(0, (std::uint64_t{1} << reg->size()) - 1);
  GrassmannElement::TermMap terms;
  const std::size_t n = term_count(rng);
  for (std::size_t t = 0; t < n; ++t) {
    const std::uint64_t bits = subset(rng);
    if (bits == 0 && !constant_term) continue;
    Monomial m;
    for (std::size_t i = 0; i < reg->size(); ++i)
      if ((bits >> i) & 1u) m.set(i);
    terms[m] += coeff(rng);
  }
  return GrassmannElement(reg, std::move(terms));
}

inline SquareMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, entry(rng));
  return m;
}

inline double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

}  // namespace detail

inline Report run_selftest(double route_tolerance = path_integral::kRouteTolerance) {
  using namespace path_integral;
  namespace osc = oscillator;
  Report report;
  auto record = [&](std::string name, double worst, double bound) {
    report.checks.push_back({std::move(name), std::isfinite(worst) && worst <= bound, worst, bound});
  };

  const double betas[] = {0.1, 0.5, 1.0, 2.0};
  const double omegas[] = {0.5, 1.0, 2.0};
  const BoundaryCondition bcs[] = {BoundaryCondition::antiperiodic, BoundaryCondition::periodic};

  // --- Grassmann algebra ------------------------------------------------------
  const RegistryPtr six = register_generators({"g0", "g1", "g2", "g3", "g4", "g5"});
  std::mt19937_64 rng(20261016);
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < six->size(); ++i)
      for (std::size_t j = 0; j < six->size(); ++j) {
        const auto gi = GrassmannElement::generator(six, i);
        const auto gj = GrassmannElement::generator(six, j);
        const auto sum = mul(gi, gj) + mul(gj, gi);
        worst = std::max(worst, sum.is_zero() ? 0.0 : 1.0);
      }
    record("grassmann.anticommutation", worst, 0.0);
  }
  {
    double worst = 0.0;
    for (std::size_t i = 0; i < six->size(); ++i) {
      const auto g = GrassmannElement::generator(six, i);
      if (!mul(g, g).is_zero()) worst = 1.0;
    }
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = detail::random_element(six, rng, false);
      GrassmannElement power = GrassmannElement::one(six);
      for (std::size_t k = 0; k <= six->size(); ++k) power = mul(power, a);
      if (!power.is_zero()) worst = 1.0;
    }
    record("grassmann.nilpotency", worst, 0.0);
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = detail::random_element(six, rng, true);
      const auto b = detail::random_element(six, rng, true);
      const auto c = detail::random_element(six, rng, true);
      worst = std::max(worst, max_abs_difference(mul(mul(a, b), c), mul(a, mul(b, c))));
    }
    record("grassmann.associativity", worst, 1e-12);
  }
  {
    double worst_sq = 0.0, worst_eq = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = detail::random_element(six, rng, true);
      for (std::size_t g = 0; g < six->size(); ++g) {
        if (!left_derivative(left_derivative(a, g), g).is_zero()) worst_sq = 1.0;
        worst_eq = std::max(worst_eq, max_abs_difference(berezin_integrate(a, g), left_derivative(a, g)));
      }
    }
    record("grassmann.derivative_squared_zero", worst_sq, 0.0);
    record("grassmann.integration_equals_differentiation", worst_eq, 0.0);
  }
  {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 4; ++n)
      for (int trial = 0; trial < 50; ++trial) {
        const SquareMatrix m = detail::random_matrix(n, rng);
        const double det = determinant(m);
        worst = std::max(worst, std::abs(gaussian_integral_expand(m) - det) / std::max(1.0, std::abs(det)));
      }
    record("grassmann.gaussian_equals_determinant", worst, route_tolerance);
  }
  {
    const RegistryPtr reg = register_generators({"c", "c*", "c'"}, {{"c", "c*"}});
    const auto kernel = GrassmannElement::one(reg) + monomial(reg, {1, 2});
    record("grassmann.trace_normalization", std::abs(trace_functional(kernel, 1, 0, 2) - 2.0), 0.0);
  }

  // --- Two-level oracle -------------------------------------------------------
  {
    const auto [cd, c] = osc::ladder_matrices();
    const bool car = osc::anticommutator(c, cd) == osc::Matrix2::identity() &&
                     osc::anticommutator(c, c) == osc::Matrix2{} && osc::anticommutator(cd, cd) == osc::Matrix2{};
    record("oscillator.canonical_anticommutation", car ? 0.0 : 1.0, 0.0);
  }
  {
    double commute = 0.0, trace = 0.0, sum = 0.0, semigroup = 0.0, energy = 0.0;
    for (double b : betas)
      for (double w : omegas) {
        const auto rho = osc::density_matrix(b, w);
        const auto h = osc::hamiltonian(w);
        const auto comm = rho * h + (-1.0) * (h * rho);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) commute = std::max(commute, std::abs(comm(i, j)));
        trace = std::max(trace, std::abs(osc::partition_trace(rho) - (1.0 + std::exp(-b * w))) /
                                    (1.0 + std::exp(-b * w)));
        sum = std::max(sum, std::abs(osc::partition_trace(rho) + osc::supertrace(rho) - 2.0));
        const auto split = osc::density_matrix(0.3 * b, w) * osc::density_matrix(0.7 * b, w);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) semigroup = std::max(semigroup, std::abs(split(i, j) - rho(i, j)));
        const double h_step = 1e-5;
        const double lz_hi = std::log(osc::partition_trace(osc::density_matrix(b + h_step, w)));
        const double lz_lo = std::log(osc::partition_trace(osc::density_matrix(b - h_step, w)));
        energy = std::max(energy, std::abs(osc::thermal_observables(b, w).mean_energy + (lz_hi - lz_lo) / (2 * h_step)));
      }
    record("oscillator.density_commutes_with_hamiltonian", commute, 0.0);
    record("oscillator.trace_closed_form", trace, 1e-15);
    record("oscillator.trace_plus_supertrace_is_two", sum, 1e-14);
    record("oscillator.semigroup", semigroup, 1e-14);
    record("oscillator.mean_energy_finite_difference", energy, 1e-8);
  }

  // --- Path integral ----------------------------------------------------------
  {
    double route = 0.0, anti = 0.0, peri = 0.0, duality = 0.0;
    for (double b : betas)
      for (double w : omegas) {
        const auto closed = kernel_closed_form(b, w);
        const auto rho = osc::density_matrix(b, w);
        anti = std::max(anti, detail::relative_error(close_boundary(closed, BoundaryCondition::antiperiodic),
                                                     osc::partition_trace(rho)));
        const double z_plus = close_boundary(closed, BoundaryCondition::periodic);
        peri = std::max(peri, detail::relative_error(z_plus, osc::supertrace(rho)));
        const int terms = static_cast<int>(std::ceil(40.0 / (b * w)));
        double bosonic = 0.0;
        for (int n = 0; n <= terms; ++n) bosonic += std::exp(-b * w * n);
        duality = std::max(duality, std::abs(z_plus * bosonic - 1.0));
        for (auto scheme : {SliceScheme::exact, SliceScheme::first_order})
          for (int n : {1, 2, 4, 8}) {
            const DiscretizedChain chain(n, b, w, scheme);
            const auto kernel = to_closed_form(contract_chain(chain));
            for (auto bc : bcs)
              route = std::max(route, std::abs(partition_via_determinant(chain, bc) - close_boundary(kernel, bc)));
          }
      }
    record("path_integral.route_equivalence", route, route_tolerance);
    record("path_integral.oracle_antiperiodic", anti, 1e-12);
    record("path_integral.oracle_periodic", peri, 1e-12);
    record("path_integral.graded_bosonic_duality", duality, 1e-12);
  }
  {
    double exact = 0.0, first = 0.0;
    const double b = 1.0, w = 1.0;
    for (int n = 1; n <= kMaxSymbolicSteps; ++n) {
      const auto k = contract_chain(DiscretizedChain(n, b, w, SliceScheme::exact));
      exact = std::max(exact, std::abs(std::abs(k.coeff_prop) - std::exp(-b * w)));
      const DiscretizedChain fo(n, b, w, SliceScheme::first_order);
      double product = 1.0;
      for (int i = 0; i < n; ++i) product *= fo.lambda();
      first = std::max(first, std::abs(std::abs(contract_chain(fo).coeff_prop) - std::abs(product)));
    }
    record("path_integral.exact_chain_coefficient", exact, 1e-13);
    record("path_integral.first_order_chain_coefficient", first, 1e-13);
  }
  {
    const DiscretizedChain chain(2, 1.0, 1.0, SliceScheme::exact);
    const auto interior = contract_interior(chain);
    const Monomial prop = Monomial::of(chain.conjugate_field(2)) | Monomial::of(chain.field(0));
    double stray = 0.0;
    for (const auto& [m, c] : interior.terms())
      if (!(m.empty() || m == prop)) stray = std::max(stray, std::abs(c));
    stray = std::max(stray, std::abs(interior.scalar_part() - 1.0));
    stray = std::max(stray, std::abs(coefficient_of_product(interior, {chain.conjugate_field(2), chain.field(0)}) -
                                     chain.lambda() * chain.lambda()));
    record("path_integral.three_slice_contraction", stray, 1e-15);
  }
  {
    double worst = 0.0;
    for (auto scheme : {SliceScheme::exact, SliceScheme::first_order})
      for (int n = 1; n <= 4; ++n)
        for (auto bc : bcs) {
          const auto m = action_matrix(DiscretizedChain(n, 1.0, 1.0, scheme), bc);
          worst = std::max(worst, std::abs(gaussian_integral_expand(m) - determinant(m)));
        }
    record("path_integral.gaussian_on_action_matrices", worst, route_tolerance);
  }

  // --- Emitted tables ---------------------------------------------------------
  {
    const int steps[] = {2, 4, 8, 16, 32, 64};
    double exact_err = 0.0, monotone = 0.0;
    for (double b : betas)
      for (double w : omegas)
        for (auto bc : bcs) {
          for (const auto& row : convergence_sweep(b, w, steps, SliceScheme::exact, bc))
            exact_err = std::max(exact_err, row.error);
          if (b * w > 2.0) continue;
          const auto rows = convergence_sweep(b, w, steps, SliceScheme::first_order, bc);
          for (std::size_t i = 1; i < rows.size(); ++i)
            monotone = std::max(monotone, rows[i].error - rows[i - 1].error);
        }
    record("cli.exact_scheme_error", exact_err, 1e-12);
    record("cli.first_order_error_nonincreasing", monotone, 0.0);

    std::vector<ResultRow> rows;
    for (const auto& r : convergence_sweep(1.0, 1.0, steps, SliceScheme::exact, BoundaryCondition::antiperiodic))
      rows.push_back(make_row("sweep", 1.0, 1.0, r.n_steps, "antiperiodic", r.z, 1.0 + std::exp(-1.0)));
    const bool same = emit(rows, OutputFormat::json) == emit(rows, OutputFormat::json) &&
                      emit(rows, OutputFormat::csv) == emit(rows, OutputFormat::csv);
    record("cli.output_determinism", same ? 0.0 : 1.0, 0.0);
  }
  return report;
}

}  // namespace berezin::selftest
