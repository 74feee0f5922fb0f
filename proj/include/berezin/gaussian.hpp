// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "berezin/calculus.hpp"
#include "berezin/matrix.hpp"

namespace berezin {

inline constexpr std::size_t kDefaultGaussianCap = 8;

/// Registry c0, c0*, c1, c1*, ... for an n-pair Gaussian integral.
inline RegistryPtr gaussian_registry(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<GeneratorRegistry::Pair> pairs;
  for (std::size_t j = 0; j < n; ++j) {
    labels.push_back("c" + std::to_string(j));
    labels.push_back("c" + std::to_string(j) + "*");
    pairs.emplace_back(labels[2 * j], labels[2 * j + 1]);
  }
  return register_generators(std::move(labels), pairs);
}

/**
 * Evaluates  int prod_j dc_j* dc_j  exp(-sum_ij c_i* M_ij c_j)  by symbolic
 * expansion in the Grassmann algebra.
 *
 * The exponential is expanded with exp_nilpotent over 2n fresh generators and
 * the pairs are integrated from j = n-1 down to 0, so the surviving scalar is
 * det M. Cost grows like 4^n, hence the cap.
 */
inline double gaussian_integral_expand(const SquareMatrix& m, std::size_t cap = kDefaultGaussianCap) {
  const std::size_t n = m.size();
  if (n > cap)
    throw std::invalid_argument("gaussian_integral_expand: dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  const RegistryPtr reg = gaussian_registry(n);
  auto field = [](std::size_t j) { return 2 * j; };
  auto conj = [](std::size_t j) { return 2 * j + 1; };

  GrassmannElement exponent = GrassmannElement::zero(reg);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) != 0.0) exponent = exponent + monomial(reg, {conj(i), field(j)}, -m(i, j));

  GrassmannElement integrand = exp_nilpotent(exponent);
  for (std::size_t j = n; j-- > 0;) integrand = integrate_pair(integrand, conj(j), field(j));
  if (integrand.max_degree() != 0) throw std::logic_error("gaussian_integral_expand: non-scalar remainder");
  return integrand.scalar_part();
}

}  // namespace berezin
