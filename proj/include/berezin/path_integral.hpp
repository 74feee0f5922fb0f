// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file path_integral.hpp
 * @brief Time-sliced coherent-state path integral of the fermionic oscillator.
 *
 * The Euclidean interval [0, beta] is cut into N steps of width eps = beta/N.
 * Each step contributes the overlap kernel 1 + lambda * c_k* c_{k-1}; the
 * intermediate pairs (c_k*, c_k), k = 1..N-1, carry the coherent-state weight
 * exp(-c_k* c_k) and are integrated out eagerly in ascending time order, so the
 * working set never exceeds a few generator pairs.
 *
 * Two routes to the partition functions are provided:
 *  - symbolic: contract the chain to a boundary kernel and close it with
 *    periodic or antiperiodic boundary conditions;
 *  - determinant: det of the closed-chain action matrix, optionally verified by
 *    a full symbolic Gaussian expansion.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "berezin/calculus.hpp"
#include "berezin/gaussian.hpp"
#include "berezin/matrix.hpp"

namespace berezin::path_integral {

/// Per-step coefficient lambda: first_order uses 1 - eps*omega, exact uses exp(-eps*omega).
enum class SliceScheme { first_order, exact };

/// antiperiodic: c(0) = -c(beta), the physical trace Z^(-).
/// periodic: c(0) = c(beta), the graded trace Z^(+).
enum class BoundaryCondition { antiperiodic, periodic };

inline constexpr int kMaxSymbolicSteps = 64;

inline std::string_view to_string(SliceScheme s) { return s == SliceScheme::exact ? "exact" : "first-order"; }
inline std::string_view to_string(BoundaryCondition bc) {
  return bc == BoundaryCondition::antiperiodic ? "antiperiodic" : "periodic";
}

inline double step_coefficient(SliceScheme scheme, double epsilon, double omega) {
  return scheme == SliceScheme::exact ? std::exp(-epsilon * omega) : 1.0 - epsilon * omega;
}

/// 1 + exp(-beta*omega) (antiperiodic) or 1 - exp(-beta*omega) (periodic).
inline double closed_form_partition(double beta, double omega, BoundaryCondition bc) {
  const double q = std::exp(-beta * omega);
  return bc == BoundaryCondition::antiperiodic ? 1.0 + q : 1.0 - q;
}

class DiscretizedChain {
 public:
  DiscretizedChain(int n_steps, double beta, double omega, SliceScheme scheme)
      : n_steps_(n_steps), beta_(beta), omega_(omega), scheme_(scheme) {
    if (n_steps < 1) throw std::invalid_argument("DiscretizedChain: n_steps must be >= 1");
    if (!(beta >= 0.0) || !std::isfinite(beta)) throw std::invalid_argument("DiscretizedChain: beta must be >= 0");
    if (!(omega >= 0.0) || !std::isfinite(omega)) throw std::invalid_argument("DiscretizedChain: omega must be >= 0");
    epsilon_ = beta / n_steps;
    if (std::abs(epsilon_ * n_steps - beta) > 1e-12 * std::max(1.0, beta))
      throw std::logic_error("DiscretizedChain: epsilon * n_steps does not reproduce beta");
    lambda_ = step_coefficient(scheme, epsilon_, omega);

    // Very fine chains are still usable by the determinant route.
    if (2 * static_cast<std::size_t>(n_steps + 1) > kMaxGenerators) return;
    std::vector<std::string> labels;
    std::vector<GeneratorRegistry::Pair> pairs;
    labels.reserve(2 * static_cast<std::size_t>(n_steps + 1));
    for (int k = 0; k <= n_steps; ++k) {
      labels.push_back("c_" + std::to_string(k));
      labels.push_back("c_" + std::to_string(k) + "*");
      pairs.emplace_back(labels[labels.size() - 2], labels.back());
    }
    registry_ = register_generators(std::move(labels), pairs);
  }

  int n_steps() const { return n_steps_; }
  double beta() const { return beta_; }
  double omega() const { return omega_; }
  double epsilon() const { return epsilon_; }
  SliceScheme scheme() const { return scheme_; }
  double lambda() const { return lambda_; }
  bool has_registry() const { return registry_ != nullptr; }
  const RegistryPtr& registry() const {
    if (!registry_) throw std::invalid_argument("chain too long for a symbolic generator registry");
    return registry_;
  }

  /// Registry index of c_k.
  std::size_t field(int k) const { return 2 * static_cast<std::size_t>(check_slice(k)); }
  /// Registry index of c_k*.
  std::size_t conjugate_field(int k) const { return 2 * static_cast<std::size_t>(check_slice(k)) + 1; }

 private:
  int check_slice(int k) const {
    if (k < 0 || k > n_steps_) throw std::out_of_range("time slice " + std::to_string(k) + " outside chain");
    return k;
  }

  int n_steps_;
  double beta_;
  double omega_;
  SliceScheme scheme_;
  double epsilon_ = 0.0;
  double lambda_ = 0.0;
  RegistryPtr registry_;
};

/// Overlap kernel of step k, 1 + lambda * c_k* c_{k-1}.
inline GrassmannElement step_kernel(const DiscretizedChain& chain, int k) {
  if (k < 1 || k > chain.n_steps()) throw std::out_of_range("step_kernel: k must lie in [1, N]");
  const auto& reg = chain.registry();
  return GrassmannElement::one(reg) +
         monomial(reg, {chain.conjugate_field(k), chain.field(k - 1)}, chain.lambda());
}

/**
 * Boundary kernel K(c*(beta), c(beta), c(0)).
 *
 * Only three monomials can occur: the identity, c*(beta) c(beta) and
 * c*(beta) c(0). Coefficients are quoted for those ordered products.
 */
struct PropagatorKernel {
  GrassmannElement element;
  std::size_t final_conjugate;  ///< c*(beta)
  std::size_t final_field;      ///< c(beta)
  std::size_t initial_field;    ///< c(0)
  double coeff_id = 0.0;
  double coeff_diag = 0.0;
  double coeff_prop = 0.0;
};

inline PropagatorKernel make_kernel(GrassmannElement element, std::size_t final_conjugate, std::size_t final_field,
                                    std::size_t initial_field) {
  const Monomial diag = Monomial::of(final_conjugate) | Monomial::of(final_field);
  const Monomial prop = Monomial::of(final_conjugate) | Monomial::of(initial_field);
  for (const auto& [m, c] : element.terms())
    if (!(m.empty() || m == diag || m == prop))
      throw std::logic_error("propagator kernel carries an unexpected monomial: " + element.to_string());

  PropagatorKernel k{std::move(element), final_conjugate, final_field, initial_field};
  k.coeff_id = k.element.scalar_part();
  k.coeff_diag = coefficient_of_product(k.element, {final_conjugate, final_field});
  k.coeff_prop = coefficient_of_product(k.element, {final_conjugate, initial_field});
  return k;
}

/**
 * Integrates out every intermediate slice of the chain:
 *
 *   int prod_{k=1}^{N-1} dc_k* dc_k exp(-c_k* c_k)  prod_{k=1}^{N} (1 + lambda c_k* c_{k-1}).
 *
 * The result is the discretized <c_N| exp(-beta H) |c_0> and has the form
 * 1 + lambda^N c_N* c_0. For N = 2 this is the single three-slice contraction.
 */
inline GrassmannElement contract_interior(const DiscretizedChain& chain) {
  if (chain.n_steps() > kMaxSymbolicSteps)
    throw std::invalid_argument("symbolic contraction limited to N <= " + std::to_string(kMaxSymbolicSteps));
  const auto& reg = chain.registry();
  GrassmannElement acc = step_kernel(chain, 1);
  for (int k = 1; k < chain.n_steps(); ++k) {
    const GrassmannElement weight =
        GrassmannElement::one(reg) - monomial(reg, {chain.conjugate_field(k), chain.field(k)});
    acc = mul(mul(acc, weight), step_kernel(chain, k + 1));
    acc = integrate_pair(acc, chain.conjugate_field(k), chain.field(k));
  }
  return acc;
}

/// Full boundary kernel: the contracted interior times the end-point factor
/// exp(c_N* c_N) = 1 + c_N* c_N.
inline PropagatorKernel contract_chain(const DiscretizedChain& chain) {
  const auto& reg = chain.registry();
  const int n = chain.n_steps();
  const GrassmannElement endpoint =
      GrassmannElement::one(reg) + monomial(reg, {chain.conjugate_field(n), chain.field(n)});
  return make_kernel(mul(contract_interior(chain), endpoint), chain.conjugate_field(n), chain.field(n),
                     chain.field(0));
}

/// Registry c(0), c(beta), c*(beta) used by the literal closed-form kernel.
inline RegistryPtr boundary_registry() {
  static const RegistryPtr reg =
      register_generators({"c(0)", "c(beta)", "c*(beta)"}, {{"c(beta)", "c*(beta)"}});
  return reg;
}

/// exp{c*(beta) c(beta) - c*(beta) c(0) exp(-beta omega)}, expanded. The two
/// exponent terms share c*(beta), so the series stops at first order.
inline PropagatorKernel kernel_closed_form(double beta, double omega) {
  if (!(beta >= 0.0)) throw std::invalid_argument("kernel_closed_form: beta must be >= 0");
  if (!(omega > 0.0)) throw std::invalid_argument("kernel_closed_form: omega must be > 0");
  const RegistryPtr reg = boundary_registry();
  const std::size_t c0 = 0, cb = 1, cb_star = 2;
  const GrassmannElement exponent =
      monomial(reg, {cb_star, cb}) + monomial(reg, {cb_star, c0}, -std::exp(-beta * omega));
  return make_kernel(exp_nilpotent(exponent), cb_star, cb, c0);
}

/// Applies c(0) -> -c(0), the bra-side sign of the coherent-state trace. Maps
/// the contracted chain kernel 1 + c*c + q c* c(0) onto the closed form
/// 1 + c*c - q c* c(0).
inline PropagatorKernel to_closed_form(const PropagatorKernel& k) {
  return make_kernel(scale_generator(k.element, k.initial_field, -1.0), k.final_conjugate, k.final_field,
                     k.initial_field);
}

/**
 * Closes the kernel with c(0) -> -c(beta) (antiperiodic) or c(0) -> c(beta)
 * (periodic) and integrates the remaining pair with the measure
 * dc(beta) dc*(beta), innermost differential first.
 */
inline double close_boundary(const PropagatorKernel& kernel, BoundaryCondition bc) {
  const Monomial allowed = Monomial::of(kernel.final_conjugate) | Monomial::of(kernel.final_field) |
                           Monomial::of(kernel.initial_field);
  if ((kernel.element.support() | allowed) != allowed)
    throw std::invalid_argument("close_boundary: kernel references generators beyond c*(beta), c(beta), c(0)");
  const double sign = bc == BoundaryCondition::antiperiodic ? -1.0 : 1.0;
  const GrassmannElement closed = substitute(kernel.element, kernel.initial_field, kernel.final_field, sign);
  const GrassmannElement z =
      berezin_integrate(berezin_integrate(closed, kernel.final_conjugate), kernel.final_field);
  if (z.max_degree() != 0) throw std::logic_error("close_boundary: non-scalar remainder");
  return z.scalar_part();
}

/**
 * Action matrix M of the closed chain, c* M c with M_kk = 1,
 * M_{k,k-1} = -lambda and the wrap-around entry M_{0,N-1} = +lambda
 * (antiperiodic) or -lambda (periodic). det M = 1 +/- lambda^N.
 */
inline SquareMatrix action_matrix(const DiscretizedChain& chain, BoundaryCondition bc) {
  const std::size_t n = static_cast<std::size_t>(chain.n_steps());
  const double lambda = chain.lambda();
  SquareMatrix m = SquareMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) m.set(k, k - 1, -lambda);
  const double corner = bc == BoundaryCondition::antiperiodic ? lambda : -lambda;
  m.set(0, n - 1, m(0, n - 1) + corner);
  return m;
}

inline constexpr double kRouteTolerance = 1e-10;

/// det of the action matrix; chains small enough for the symbolic Gaussian
/// expansion are cross-checked against it.
inline double partition_via_determinant(const DiscretizedChain& chain, BoundaryCondition bc,
                                        std::size_t gaussian_cap = kDefaultGaussianCap) {
  const SquareMatrix m = action_matrix(chain, bc);
  const double det = determinant(m);
  if (m.size() <= gaussian_cap) {
    const double expanded = gaussian_integral_expand(m, gaussian_cap);
    if (std::abs(expanded - det) > kRouteTolerance * std::max(1.0, std::abs(det)))
      throw std::logic_error("Gaussian expansion disagrees with determinant for N = " +
                             std::to_string(chain.n_steps()));
  }
  return det;
}

struct SweepRow {
  int n_steps = 0;
  double z = 0.0;
  double error = 0.0;  ///< |z - closed form|
};

inline std::vector<SweepRow> convergence_sweep(double beta, double omega, std::span<const int> n_list,
                                               SliceScheme scheme, BoundaryCondition bc) {
  if (n_list.empty()) throw std::invalid_argument("convergence_sweep: empty step list");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1]) throw std::invalid_argument("convergence_sweep: step list must ascend");
  const double closed = closed_form_partition(beta, omega, bc);
  std::vector<SweepRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    const double z = partition_via_determinant(DiscretizedChain(n, beta, omega, scheme), bc);
    rows.push_back({n, z, std::abs(z - closed)});
  }
  return rows;
}

}  // namespace berezin::path_integral
