// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "berezin/monomial.hpp"

namespace berezin {

/// Coefficients with magnitude below this are never stored.
inline constexpr double kDefaultDropTolerance = 1e-15;

/**
 * Ordered set of named anticommuting generators.
 *
 * Registration order is the canonical monomial order. Optionally, generators
 * are grouped into conjugate pairs (c, c*) which Berezin pair integration and
 * the coherent-state trace require.
 */
class GeneratorRegistry {
 public:
  using Pair = std::pair<std::string, std::string>;

  GeneratorRegistry(std::vector<std::string> labels, const std::vector<Pair>& pairs = {},
                    double drop_tolerance = kDefaultDropTolerance)
      : labels_(std::move(labels)), conjugates_(labels_.size()), drop_tolerance_(drop_tolerance) {
    if (labels_.empty()) throw std::invalid_argument("generator registry needs at least one label");
    if (labels_.size() > kMaxGenerators)
      throw std::invalid_argument("generator registry exceeds " + std::to_string(kMaxGenerators) + " labels");
    if (!(drop_tolerance_ >= 0.0)) throw std::invalid_argument("drop tolerance must be nonnegative");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!by_label_.emplace(labels_[i], i).second)
        throw std::invalid_argument("duplicate generator label '" + labels_[i] + "'");
    }
    for (const auto& [a, b] : pairs) {
      const std::size_t ia = index_of(a);
      const std::size_t ib = index_of(b);
      if (ia == ib) throw std::invalid_argument("generator '" + a + "' cannot be its own conjugate");
      if ((conjugates_[ia] && *conjugates_[ia] != ib) || (conjugates_[ib] && *conjugates_[ib] != ia))
        throw std::invalid_argument("conflicting pairing for '" + a + "' / '" + b + "'");
      conjugates_[ia] = ib;
      conjugates_[ib] = ia;
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t index) const { return labels_.at(index); }
  const std::vector<std::string>& labels() const { return labels_; }
  double drop_tolerance() const { return drop_tolerance_; }

  bool contains(std::string_view label) const { return by_label_.contains(std::string(label)); }

  std::size_t index_of(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end()) throw std::out_of_range("unknown generator '" + std::string(label) + "'");
    return it->second;
  }

  std::optional<std::size_t> conjugate(std::size_t index) const { return conjugates_.at(index); }

  bool is_pair(std::size_t a, std::size_t b) const {
    return a < size() && conjugates_[a] && *conjugates_[a] == b;
  }

  void check_index(std::size_t index) const {
    if (index >= size())
      throw std::out_of_range("generator index " + std::to_string(index) + " outside registry of " +
                              std::to_string(size()));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::optional<std::size_t>> conjugates_;
  std::unordered_map<std::string, std::size_t> by_label_;
  double drop_tolerance_;
};

using RegistryPtr = std::shared_ptr<const GeneratorRegistry>;

inline RegistryPtr register_generators(std::vector<std::string> labels,
                                       const std::vector<GeneratorRegistry::Pair>& pairs = {},
                                       double drop_tolerance = kDefaultDropTolerance) {
  return std::make_shared<const GeneratorRegistry>(std::move(labels), pairs, drop_tolerance);
}

}  // namespace berezin
