// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file monomial.hpp
 * @brief Fixed-width bitmask encoding of Grassmann monomials.
 *
 * Bit i set means generator i (registry index) appears in the product. The
 * represented product is always in canonical (ascending index) order, so a
 * monomial is a set and every sign is derived from transposition counts
 * against that order.
 */

#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace berezin {

/// Upper bound on the number of generators a registry may hold.
inline constexpr std::size_t kMaxGenerators = 512;

class Monomial {
 public:
  static constexpr std::size_t kWords = kMaxGenerators / 64;

  constexpr Monomial() = default;

  /// Single-generator monomial.
  static constexpr Monomial of(std::size_t index) {
    Monomial m;
    m.set(index);
    return m;
  }

  constexpr bool contains(std::size_t index) const {
    return (words_[index / 64] >> (index % 64)) & 1u;
  }

  constexpr void set(std::size_t index) { words_[index / 64] |= std::uint64_t{1} << (index % 64); }
  constexpr void reset(std::size_t index) { words_[index / 64] &= ~(std::uint64_t{1} << (index % 64)); }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Number of generators in the product.
  constexpr std::size_t degree() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  constexpr bool is_even() const { return degree() % 2 == 0; }

  /// Number of generators with index strictly below `index`.
  constexpr std::size_t count_below(std::size_t index) const {
    const std::size_t word = index / 64;
    std::size_t n = 0;
    for (std::size_t w = 0; w < word; ++w) n += static_cast<std::size_t>(std::popcount(words_[w]));
    const std::uint64_t mask = (std::uint64_t{1} << (index % 64)) - 1;
    return n + static_cast<std::size_t>(std::popcount(words_[word] & mask));
  }

  constexpr bool intersects(const Monomial& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  constexpr Monomial operator|(const Monomial& other) const {
    Monomial m;
    for (std::size_t w = 0; w < kWords; ++w) m.words_[w] = words_[w] | other.words_[w];
    return m;
  }

  /// Ascending generator indices.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(degree());
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  constexpr bool operator==(const Monomial&) const = default;

  /// Graded order: by degree, then lexicographically on the ascending index list.
  constexpr std::strong_ordering operator<=>(const Monomial& other) const {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = words_[w] ^ other.words_[w];
      if (diff == 0) continue;
      // The set owning the lowest differing generator sorts first.
      const std::uint64_t lowest = diff & (~diff + 1);
      return (words_[w] & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  const std::array<std::uint64_t, kWords>& words() const { return words_; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// Sign (+1 / -1) of the permutation sorting the concatenation `left || right`,
/// assuming the two sets are disjoint.
constexpr double merge_sign(const Monomial& left, const Monomial& right) {
  const std::size_t left_degree = left.degree();
  std::size_t swaps = 0;
  for (std::size_t w = 0; w < Monomial::kWords; ++w) {
    std::uint64_t bits = right.words()[w];
    while (bits != 0) {
      const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      swaps += left_degree - left.count_below(j);
      bits &= bits - 1;
    }
  }
  return (swaps % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace berezin

template <>
struct std::hash<berezin::Monomial> {
  std::size_t operator()(const berezin::Monomial& m) const noexcept {
    std::size_t h = 0;
    for (auto w : m.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
