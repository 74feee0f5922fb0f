// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file calculus.hpp
 * @brief Berezin calculus on GrassmannElement: left derivatives, integration,
 *        nilpotent exponentials, generator substitution and the coherent-state
 *        trace functional.
 *
 * Conventions used everywhere in this library:
 *  - derivatives act from the left: d/dg (g X) = X;
 *  - the Berezin integral over g is the left derivative in g;
 *  - a pair measure dg* dg acts innermost first, so that
 *    integrate_pair(g g*, g*, g) == 1 and integrate_pair(exp(-g* g), g*, g) == 1.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "berezin/element.hpp"

namespace berezin {

inline GrassmannElement left_derivative(const GrassmannElement& a, std::size_t g) {
  a.registry()->check_index(g);
  detail::TermAccumulator acc(a.registry());
  for (const auto& [m, c] : a.terms()) {
    if (!m.contains(g)) continue;
    // Bring g to the front past the generators sorted before it.
    const double sign = (m.count_below(g) % 2 == 0) ? 1.0 : -1.0;
    Monomial rest = m;
    rest.reset(g);
    acc.add(rest, sign * c);
  }
  return std::move(acc).finish();
}

/// Berezin integral over a single generator; identical to the left derivative.
inline GrassmannElement berezin_integrate(const GrassmannElement& a, std::size_t g) {
  return left_derivative(a, g);
}

/// Integral over the measure dg* dg: integrates g first, then g*.
inline GrassmannElement integrate_pair(const GrassmannElement& a, std::size_t g_star, std::size_t g) {
  if (!a.registry()->is_pair(g_star, g))
    throw std::invalid_argument("generators " + std::to_string(g_star) + " and " + std::to_string(g) +
                                " are not a registered conjugate pair");
  return berezin_integrate(berezin_integrate(a, g), g_star);
}

/// exp(a) for an element with no scalar part. The series terminates because
/// a^k vanishes once k exceeds the generator count.
inline GrassmannElement exp_nilpotent(const GrassmannElement& a) {
  if (a.scalar_part() != 0.0) throw std::invalid_argument("exp_nilpotent: element has a nonzero constant term");
  GrassmannElement result = GrassmannElement::one(a.registry());
  GrassmannElement term = result;
  const std::size_t max_order = a.registry()->size() + 1;
  for (std::size_t k = 1; k <= max_order; ++k) {
    term = scale(mul(term, a), 1.0 / static_cast<double>(k));
    if (term.is_zero()) break;
    result = add(result, term);
  }
  return result;
}

/// Rescales generator g by `factor` (the substitution g -> factor * g).
inline GrassmannElement scale_generator(const GrassmannElement& a, std::size_t g, double factor) {
  a.registry()->check_index(g);
  GrassmannElement::TermMap terms;
  for (const auto& [m, c] : a.terms()) terms.emplace(m, m.contains(g) ? factor * c : c);
  return GrassmannElement(a.registry(), std::move(terms));
}

/// Replaces generator `from` with `factor * to` in every monomial.
inline GrassmannElement substitute(const GrassmannElement& a, std::size_t from, std::size_t to, double factor) {
  a.registry()->check_index(from);
  a.registry()->check_index(to);
  if (from == to) return scale_generator(a, from, factor);
  detail::TermAccumulator acc(a.registry());
  const Monomial target = Monomial::of(to);
  for (const auto& [m, c] : a.terms()) {
    if (!m.contains(from)) {
      acc.add(m, c);
      continue;
    }
    // m = sign * from * rest  ->  sign * factor * to * rest
    const double sign = (m.count_below(from) % 2 == 0) ? 1.0 : -1.0;
    Monomial rest = m;
    rest.reset(from);
    if (rest.contains(to)) continue;
    acc.add(rest | target, sign * factor * merge_sign(target, rest) * c);
  }
  return std::move(acc).finish();
}

/**
 * Coherent-state trace of an operator given by its kernel K(c*, c').
 *
 * Computes  int dc* dc  exp(-c* c) K(c*, -c): the ket variable c' is replaced by
 * -c, the weight (1 - c* c) is applied, and the pair (c*, c) integrated out.
 * The kernel may only reference c* and c'.
 */
inline double trace_functional(const GrassmannElement& kernel, std::size_t c_star, std::size_t c,
                               std::size_t c_prime) {
  const auto& reg = kernel.registry();
  if (!reg->is_pair(c_star, c)) throw std::invalid_argument("trace_functional: (c*, c) is not a registered pair");
  if (c_prime == c || c_prime == c_star) throw std::invalid_argument("trace_functional: c' must be distinct from c, c*");
  const Monomial allowed = Monomial::of(c_star) | Monomial::of(c_prime);
  if ((kernel.support() | allowed) != allowed)
    throw std::invalid_argument("trace_functional: kernel references generators other than c*, c'");

  const GrassmannElement bra_flipped = substitute(kernel, c_prime, c, -1.0);
  const GrassmannElement weight =
      GrassmannElement::one(reg) - monomial(reg, {c_star, c});
  const GrassmannElement integrand = mul(weight, bra_flipped);
  const GrassmannElement result = integrate_pair(integrand, c_star, c);
  if (result.max_degree() != 0) throw std::logic_error("trace_functional: non-scalar remainder");
  return result.scalar_part();
}

}  // namespace berezin
