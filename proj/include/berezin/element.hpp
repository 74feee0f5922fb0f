// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file element.hpp
 * @brief Sparse elements of a finite Grassmann algebra.
 *
 * An element is a map from canonical monomials to real coefficients, tied to
 * the registry that names its generators. Elements are immutable values; all
 * arithmetic returns new elements.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "berezin/monomial.hpp"
#include "berezin/registry.hpp"

namespace berezin {

class GrassmannElement {
 public:
  using TermMap = std::map<Monomial, double>;

  explicit GrassmannElement(RegistryPtr registry) : registry_(std::move(registry)) {
    if (!registry_) throw std::invalid_argument("element needs a registry");
  }

  GrassmannElement(RegistryPtr registry, TermMap terms) : GrassmannElement(std::move(registry)) {
    for (auto& [m, c] : terms) {
      check_monomial(m);
      if (std::abs(c) >= registry_->drop_tolerance() && c != 0.0) terms_.emplace(m, c);
    }
  }

  static GrassmannElement zero(RegistryPtr registry) { return GrassmannElement(std::move(registry)); }

  static GrassmannElement scalar(RegistryPtr registry, double value) {
    return GrassmannElement(std::move(registry), TermMap{{Monomial{}, value}});
  }

  static GrassmannElement one(RegistryPtr registry) { return scalar(std::move(registry), 1.0); }

  static GrassmannElement generator(RegistryPtr registry, std::size_t index, double coeff = 1.0) {
    registry->check_index(index);
    return GrassmannElement(std::move(registry), TermMap{{Monomial::of(index), coeff}});
  }

  static GrassmannElement generator(const RegistryPtr& registry, std::string_view label, double coeff = 1.0) {
    return generator(registry, registry->index_of(label), coeff);
  }

  const RegistryPtr& registry() const { return registry_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  double coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0.0 : it->second;
  }

  double scalar_part() const { return coefficient(Monomial{}); }

  /// Largest generator count over the stored monomials.
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// Union of every generator referenced by a stored monomial.
  Monomial support() const {
    Monomial s;
    for (const auto& [m, c] : terms_) s = s | m;
    return s;
  }

  bool shares_registry(const GrassmannElement& other) const { return registry_ == other.registry_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      const double mag = std::abs(c);
      const auto idx = m.indices();
      if (idx.empty() || mag != 1.0) os << mag;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k > 0 || mag != 1.0) os << "*";
        os << registry_->label(idx[k]);
      }
    }
    return os.str();
  }

 private:
  void check_monomial(const Monomial& m) const {
    for (std::size_t w = 0; w < Monomial::kWords; ++w) {
      std::uint64_t bits = m.words()[w];
      if (bits == 0) continue;
      const std::size_t top = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits));
      registry_->check_index(top);
    }
  }

  RegistryPtr registry_;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const GrassmannElement& a) { return os << a.to_string(); }

namespace detail {

inline void require_same_registry(const GrassmannElement& a, const GrassmannElement& b) {
  if (!a.shares_registry(b)) throw std::invalid_argument("Grassmann elements belong to different registries");
}

/// Accumulates terms in insertion order, then builds a pruned element.
class TermAccumulator {
 public:
  explicit TermAccumulator(RegistryPtr registry) : registry_(std::move(registry)) {}

  void add(const Monomial& m, double c) { acc_[m] += c; }

  GrassmannElement finish() && {
    GrassmannElement::TermMap terms(acc_.begin(), acc_.end());
    return GrassmannElement(std::move(registry_), std::move(terms));
  }

 private:
  RegistryPtr registry_;
  std::unordered_map<Monomial, double> acc_;
};

}  // namespace detail

/// Product of generators listed in `indices`, in that order, times `coeff`.
/// A repeated index gives the zero element.
inline GrassmannElement monomial(const RegistryPtr& registry, std::span<const std::size_t> indices,
                                 double coeff = 1.0) {
  Monomial m;
  double sign = 1.0;
  for (std::size_t idx : indices) {
    registry->check_index(idx);
    if (m.contains(idx)) return GrassmannElement::zero(registry);
    sign *= merge_sign(m, Monomial::of(idx));
    m.set(idx);
  }
  return GrassmannElement(registry, {{m, sign * coeff}});
}

inline GrassmannElement monomial(const RegistryPtr& registry, std::initializer_list<std::size_t> indices,
                                 double coeff = 1.0) {
  return monomial(registry, std::span<const std::size_t>(indices.begin(), indices.size()), coeff);
}

inline GrassmannElement add(const GrassmannElement& a, const GrassmannElement& b) {
  detail::require_same_registry(a, b);
  GrassmannElement::TermMap terms = a.terms();
  for (const auto& [m, c] : b.terms()) terms[m] += c;
  return GrassmannElement(a.registry(), std::move(terms));
}

inline GrassmannElement scale(const GrassmannElement& a, double s) {
  GrassmannElement::TermMap terms = a.terms();
  for (auto& [m, c] : terms) c *= s;
  return GrassmannElement(a.registry(), std::move(terms));
}

inline GrassmannElement mul(const GrassmannElement& a, const GrassmannElement& b) {
  detail::require_same_registry(a, b);
  detail::TermAccumulator acc(a.registry());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.intersects(mb)) continue;
      acc.add(ma | mb, merge_sign(ma, mb) * ca * cb);
    }
  }
  return std::move(acc).finish();
}

inline GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) { return add(a, b); }
inline GrassmannElement operator-(const GrassmannElement& a) { return scale(a, -1.0); }
inline GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) { return add(a, -b); }
inline GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) { return mul(a, b); }
inline GrassmannElement operator*(double s, const GrassmannElement& a) { return scale(a, s); }
inline GrassmannElement operator*(const GrassmannElement& a, double s) { return scale(a, s); }

/// Coefficient of the product g_{i1} g_{i2} ... taken in the listed order.
/// Zero when the listed generators repeat.
inline double coefficient_of_product(const GrassmannElement& a, std::span<const std::size_t> ordered) {
  Monomial m;
  double sign = 1.0;
  for (std::size_t idx : ordered) {
    a.registry()->check_index(idx);
    if (m.contains(idx)) return 0.0;
    sign *= merge_sign(m, Monomial::of(idx));
    m.set(idx);
  }
  // a = ... + k * (canonical m) = ... + k*sign * (ordered product)
  return sign * a.coefficient(m);
}

inline double coefficient_of_product(const GrassmannElement& a, std::initializer_list<std::size_t> ordered) {
  return coefficient_of_product(a, std::span<const std::size_t>(ordered.begin(), ordered.size()));
}

/// Largest coefficient magnitude of a - b.
inline double max_abs_difference(const GrassmannElement& a, const GrassmannElement& b) {
  detail::require_same_registry(a, b);
  double worst = 0.0;
  for (const auto& [m, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coefficient(m)));
  for (const auto& [m, c] : b.terms())
    if (!a.terms().contains(m)) worst = std::max(worst, std::abs(c));
  return worst;
}

}  // namespace berezin
