// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "berezin/calculus.hpp"

using namespace berezin;
using Catch::Approx;

namespace {

// Independent sign oracle: bubble-sort the index word, counting swaps.
// Returns 0 when an index repeats.
double bubble_sign(std::vector<std::size_t> word) {
  int swaps = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
      if (word[j] == word[j + 1]) return 0.0;
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        ++swaps;
      }
    }
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i] == word[i - 1]) return 0.0;
  return swaps % 2 == 0 ? 1.0 : -1.0;
}

RegistryPtr four() { return register_generators({"c0", "c1", "c2", "c3"}); }

}  // namespace

TEST_CASE("registry construction", "[registry]") {
  auto pair = register_generators({"c", "c*"}, {{"c", "c*"}});
  CHECK(pair->size() == 2);
  CHECK(pair->is_pair(0, 1));
  CHECK(pair->is_pair(1, 0));
  CHECK(pair->conjugate(0) == 1u);

  auto two_pairs = register_generators({"c0", "c0*", "c1", "c1*"});
  CHECK(two_pairs->size() == 4);
  CHECK(two_pairs->index_of("c1") == 2);
  CHECK_FALSE(two_pairs->conjugate(0).has_value());

  CHECK_THROWS_AS(register_generators({"c", "c"}), std::invalid_argument);
  CHECK_THROWS_AS(register_generators({"c", "c*"}, {{"c", "d"}}), std::out_of_range);
  CHECK_THROWS_AS(register_generators({"c", "c*"}, {{"c", "c"}}), std::invalid_argument);
  CHECK_THROWS_AS(register_generators({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}), std::invalid_argument);
  CHECK_THROWS_AS(register_generators({}), std::invalid_argument);
}

TEST_CASE("monomial sorts its indices and tracks the sign", "[element]") {
  auto reg = four();
  const auto swapped = monomial(reg, {1, 0}, 1.0);
  REQUIRE(swapped.size() == 1);
  CHECK(swapped.coefficient(Monomial::of(0) | Monomial::of(1)) == -1.0);

  const auto single = monomial(reg, {0}, 2.5);
  CHECK(single.coefficient(Monomial::of(0)) == 2.5);

  CHECK(monomial(reg, {0, 0}, 1.0).is_zero());
  CHECK_THROWS_AS(monomial(reg, {7}, 1.0), std::out_of_range);
}

TEST_CASE("add and scale", "[element]") {
  auto reg = four();
  const auto c0 = GrassmannElement::generator(reg, 0);
  const auto c1 = GrassmannElement::generator(reg, 1);
  const auto zero = GrassmannElement::zero(reg);
  const auto a = c0 + 3.0 * c1;

  CHECK(max_abs_difference(a + zero, a) == 0.0);
  CHECK(scale(a, 0.0).is_zero());
  const auto sum = (c0 + c1) + (c0 - c1);
  CHECK(sum.size() == 1);
  CHECK(sum.coefficient(Monomial::of(0)) == 2.0);

  auto other = four();
  CHECK_THROWS_AS(add(c0, GrassmannElement::generator(other, 0)), std::invalid_argument);
  CHECK_THROWS_AS(mul(c0, GrassmannElement::generator(other, 0)), std::invalid_argument);
}

TEST_CASE("drop tolerance prunes float dust", "[element]") {
  auto reg = four();
  const auto a = GrassmannElement::scalar(reg, 1.0) + GrassmannElement::generator(reg, 0, 1e-16);
  CHECK(a.size() == 1);
  const auto b = GrassmannElement::generator(reg, 1, 0.1 + 0.2) - GrassmannElement::generator(reg, 1, 0.3);
  CHECK(b.is_zero());
}

TEST_CASE("multiplication anticommutes", "[element]") {
  auto reg = four();
  const auto c0 = GrassmannElement::generator(reg, 0);
  const auto c1 = GrassmannElement::generator(reg, 1);
  const Monomial m01 = Monomial::of(0) | Monomial::of(1);

  CHECK((c0 * c1).coefficient(m01) == 1.0);
  CHECK((c1 * c0).coefficient(m01) == -1.0);
  CHECK((c0 * c0).is_zero());

  const auto x = GrassmannElement::one(reg) + c0 * c1;
  const auto sq = x * x;
  CHECK(sq.size() == 2);
  CHECK(sq.scalar_part() == 1.0);
  CHECK(sq.coefficient(m01) == 2.0);
}

TEST_CASE("product signs match a bubble-sort oracle", "[element]") {
  auto reg = register_generators({"a", "b", "c", "d", "e", "f", "g", "h"});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> idx(0, 7), len(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::size_t> left(len(rng)), right(len(rng));
    for (auto& i : left) i = idx(rng);
    for (auto& i : right) i = idx(rng);
    std::vector<std::size_t> word = left;
    word.insert(word.end(), right.begin(), right.end());

    const auto product = mul(monomial(reg, left), monomial(reg, right));
    // Oracle: sign of the whole word relative to sorted order.
    const double expected = bubble_sign(word);
    std::vector<std::size_t> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    Monomial m;
    for (auto i : sorted) m.set(i);
    INFO("trial " << trial);
    CHECK(product.coefficient(m) == expected);
    CHECK(product.size() == (expected == 0.0 ? 0u : 1u));
    CHECK(coefficient_of_product(product, word) == (expected == 0.0 ? 0.0 : 1.0));
  }
}

TEST_CASE("left derivative", "[calculus]") {
  auto reg = four();
  const auto c0 = GrassmannElement::generator(reg, 0);
  const auto c1 = GrassmannElement::generator(reg, 1);

  CHECK(max_abs_difference(left_derivative(c0, 0), GrassmannElement::one(reg)) == 0.0);
  CHECK(max_abs_difference(left_derivative(c0 * c1, 1), -c0) == 0.0);
  CHECK(left_derivative(c1, 0).is_zero());
  CHECK_THROWS_AS(left_derivative(c0, 9), std::out_of_range);
}

TEST_CASE("Berezin integration", "[calculus]") {
  auto reg = four();
  const auto c0 = GrassmannElement::generator(reg, 0);
  const auto c1 = GrassmannElement::generator(reg, 1);

  CHECK(berezin_integrate(c0, 0).scalar_part() == 1.0);
  CHECK(berezin_integrate(GrassmannElement::one(reg), 0).is_zero());
  CHECK(max_abs_difference(berezin_integrate(c0 * c1, 0), c1) == 0.0);
}

TEST_CASE("pair integration uses the dc* dc convention", "[calculus]") {
  auto reg = register_generators({"c", "c*", "x"}, {{"c", "c*"}});
  const std::size_t c = 0, cs = 1;
  const auto one = GrassmannElement::one(reg);

  CHECK(integrate_pair(monomial(reg, {c, cs}), cs, c).scalar_part() == 1.0);
  CHECK(integrate_pair(one - monomial(reg, {cs, c}), cs, c).scalar_part() == 1.0);
  CHECK(integrate_pair(exp_nilpotent(-monomial(reg, {cs, c})), cs, c).scalar_part() == 1.0);
  CHECK(integrate_pair(one, cs, c).is_zero());
  CHECK_THROWS_AS(integrate_pair(one, 2, c), std::invalid_argument);
}

TEST_CASE("nilpotent exponential", "[calculus]") {
  auto reg = register_generators({"c", "c*"}, {{"c", "c*"}});
  const double alpha = 0.75;
  const auto e = exp_nilpotent(monomial(reg, {1, 0}, alpha));
  CHECK(e.scalar_part() == 1.0);
  CHECK(coefficient_of_product(e, {1, 0}) == alpha);
  CHECK(e.size() == 2);

  CHECK(max_abs_difference(exp_nilpotent(GrassmannElement::zero(reg)), GrassmannElement::one(reg)) == 0.0);
  CHECK_THROWS_AS(exp_nilpotent(GrassmannElement::one(reg)), std::invalid_argument);

  auto r4 = four();
  const auto cross = exp_nilpotent(monomial(r4, {0, 1}) + monomial(r4, {2, 3}));
  const auto expected = GrassmannElement::one(r4) + monomial(r4, {0, 1}) + monomial(r4, {2, 3}) +
                        monomial(r4, {0, 1, 2, 3});
  CHECK(max_abs_difference(cross, expected) == 0.0);
}

TEST_CASE("substitution replaces one generator", "[calculus]") {
  auto reg = register_generators({"a", "b", "c"});
  // a c  with a -> -b  gives  -b c
  const auto s = substitute(monomial(reg, {0, 2}), 0, 1, -1.0);
  CHECK(max_abs_difference(s, monomial(reg, {1, 2}, -1.0)) == 0.0);
  // c a with a -> b gives c b = -b c
  const auto t = substitute(monomial(reg, {2, 0}), 0, 1, 1.0);
  CHECK(coefficient_of_product(t, {2, 1}) == 1.0);
  CHECK(coefficient_of_product(t, {1, 2}) == -1.0);
  // b a with a -> b vanishes
  CHECK(substitute(monomial(reg, {1, 0}), 0, 1, 1.0).is_zero());
  CHECK(max_abs_difference(scale_generator(monomial(reg, {0, 1}), 1, 3.0), monomial(reg, {0, 1}, 3.0)) == 0.0);
}

TEST_CASE("coherent-state trace functional", "[calculus]") {
  auto reg = register_generators({"c", "c*", "c'"}, {{"c", "c*"}});
  const std::size_t c = 0, cs = 1, cp = 2;
  const auto one = GrassmannElement::one(reg);

  CHECK(trace_functional(one + monomial(reg, {cs, cp}), cs, c, cp) == 2.0);
  CHECK(trace_functional(one, cs, c, cp) == 1.0);
  for (double q : {-1.5, 0.0, 0.25, 0.36787944117144233, 3.0})
    CHECK(trace_functional(one + monomial(reg, {cs, cp}, q), cs, c, cp) == Approx(1.0 + q).margin(1e-15));

  CHECK_THROWS_AS(trace_functional(monomial(reg, {c}), cs, c, cp), std::invalid_argument);
  CHECK_THROWS_AS(trace_functional(one, cp, c, cs), std::invalid_argument);
}
