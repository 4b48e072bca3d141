// Copyright 2026 The diagram-ops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <random>

#include "diagram_ops/characters.hpp"
#include "diagram_ops/errors.hpp"
#include "diagram_ops/json_io.hpp"
#include "diagram_ops/ppoly.hpp"
#include "diagram_ops/psym.hpp"
#include "support/oracles.hpp"

using namespace diagram_ops;

namespace {

PPoly p(int k) { return PPoly::variable(k); }

std::vector<Rational> random_points(std::mt19937_64& rng, std::size_t count) {
  // Distinct nonzero rationals with small numerators and denominators.
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> xs;
  while (xs.size() < count) {
    Rational x(num(rng), den(rng));
    x.canonicalize();
    if (x == 0 || std::find(xs.begin(), xs.end(), x) != xs.end()) continue;
    xs.push_back(x);
  }
  return xs;
}

PPoly random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> coin(0, 2), num(-5, 5), den(1, 4);
  PPoly f;
  for (int n = 0; n <= max_degree; ++n)
    for (const auto& mono : partitions_of(n))
      if (coin(rng) == 0) f.add_term(mono, make_rational(num(rng), den(rng)));
  return f;
}

}  // namespace

TEST_CASE("ppoly text") {
  CHECK(to_string(PPoly{}) == "0");
  CHECK(to_string(PPoly(Rational(3, 2))) == "3/2");
  const PPoly f = parse_ppoly("1/3*p1^3 + -1/3*p3");
  CHECK(to_string(f) == "1/3*p1^3 + -1/3*p3");
  CHECK(parse_ppoly("1/3*p1*p1*p1 - 1/3*p3") == f);
  CHECK(parse_ppoly("p2") == p(2));
  CHECK(parse_ppoly("2") == PPoly(Rational(2)));
  CHECK(to_string(parse_ppoly("p2*p1 + p1*p2")) == "2*p1*p2");
  CHECK_THROWS_AS(parse_ppoly(""), ParseError);
  CHECK_THROWS_AS(parse_ppoly("p0"), ParseError);
  CHECK_THROWS_AS(parse_ppoly("p1 +"), ParseError);
  CHECK_THROWS_AS(parse_ppoly("q1"), ParseError);
  CHECK_THROWS_AS(parse_ppoly("1/0*p1"), ParseError);
}

TEST_CASE("ppoly arithmetic and truncation") {
  const PPoly f = p(1) + p(2);
  CHECK(f * f == p(1) * p(1) + Rational(2) * p(1) * p(2) + p(2) * p(2));
  CHECK((f * f).max_degree() == 4);
  CHECK((f - f).is_zero());
  const PPoly g = (PPoly(Rational(1)) + p(1)).truncated(2);
  CHECK(g.bound() == 2);
  const PPoly cube = g * g * g;
  CHECK(cube.bound() == 2);
  CHECK(cube == PPoly(Rational(1)) + Rational(3) * p(1) + Rational(3) * p(1) * p(1));
  CHECK(combine_bounds(3, std::nullopt) == 3);
  CHECK(combine_bounds(3, 2) == 2);
  CHECK((g + p(3)).is_zero() == false);
  CHECK((g + p(3)).coeff(Partition{3}) == 0);
  CHECK((p(1) * p(1) * p(2)).derivative(1) == Rational(2) * p(1) * p(2));
  CHECK(p(3).derivative(2).is_zero());
  CHECK((p(1) + p(1) * p(2)).homogeneous_part(3) == p(1) * p(2));
  CHECK(monomial_product(Partition{2, 1}, Partition{3, 1}) == Partition{3, 2, 1, 1});

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const PPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 2);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    for (int d = 0; d <= 6; ++d) {
      PPoly lhs = (a * b).homogeneous_part(d), rhs;
      for (int e = 0; e <= d; ++e) rhs += a.homogeneous_part(e) * b.homogeneous_part(d - e);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("p_monomial and complete homogeneous") {
  CHECK(p_monomial(Partition{2}) == Rational(1, 2) * p(2));
  CHECK(p_monomial(Partition{1, 1}) == Rational(1, 2) * p(1) * p(1));
  CHECK(p_monomial(Partition{}) == PPoly(Rational(1)));
  CHECK(complete_homogeneous(0) == PPoly(Rational(1)));
  CHECK(complete_homogeneous(2) == parse_ppoly("1/2*p1^2 + 1/2*p2"));
  CHECK(complete_homogeneous(3) == parse_ppoly("1/6*p1^3 + 1/2*p1*p2 + 1/3*p3"));
  for (int n = 0; n <= 7; ++n) {
    PPoly h;
    for (const auto& mu : partitions_of(n))
      h.add_term(mu, Rational(1) / Rational(oracle::centralizer(mu)));
    CHECK(complete_homogeneous(n) == h);
  }
}

TEST_CASE("schur polynomials") {
  CHECK(schur(Partition{2}) == parse_ppoly("1/2*p1^2 + 1/2*p2"));
  CHECK(schur(Partition{1, 1}) == parse_ppoly("1/2*p1^2 - 1/2*p2"));
  CHECK(to_string(schur(Partition{2, 1})) == "1/3*p1^3 + -1/3*p3");
  CHECK(schur(Partition{}) == PPoly(Rational(1)));
  for (int n = 0; n <= 7; ++n)
    for (const auto& r : partitions_of(n)) {
      const PPoly s = schur(r);
      CHECK(s == schur_from_characters(r));
      CHECK(s.homogeneous_part(n) == s);
      // s_R = sum_mu chi_R(mu) p_mu / z_mu with characters from the Frobenius oracle.
      for (const auto& mu : partitions_of(n))
        CHECK(s.coeff(mu) == Rational(oracle::frobenius_character(r, mu)) /
                                 Rational(oracle::centralizer(mu)));
    }
}

TEST_CASE("schur expansion") {
  CHECK(schur_expand(p(2)) == SchurCoefficients{{Partition{2}, 1}, {Partition{1, 1}, -1}});
  CHECK(schur_expand(schur(Partition{2, 1})) == SchurCoefficients{{Partition{2, 1}, 1}});
  CHECK(schur_expand(p(1) * p(1)) == SchurCoefficients{{Partition{2}, 1}, {Partition{1, 1}, 1}});
  CHECK(schur_expand(PPoly{}).empty());

  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      const auto coeffs = schur_expand(p_monomial(mu) * Rational(aut_order(mu)));
      for (const auto& r : partitions_of(n)) {
        auto it = coeffs.find(r);
        const Rational got = it == coeffs.end() ? Rational(0) : it->second;
        CHECK(got == oracle::frobenius_character(r, mu));
      }
    }

  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) {
    const PPoly f = random_poly(rng, 6);
    CHECK(from_schur(schur_expand(f)) == f);
  }
}

TEST_CASE("exp_p1") {
  CHECK(exp_p1(0) == PPoly(Rational(1)));
  CHECK(exp_p1(2) == parse_ppoly("1 + p1 + 1/2*p1^2"));
  CHECK(exp_p1(3).bound() == 3);
  const auto coeffs = schur_expand(exp_p1(4));
  for (int n = 0; n <= 4; ++n)
    for (const auto& r : partitions_of(n)) {
      REQUIRE(coeffs.count(r) == 1);
      CHECK(coeffs.at(r) == Rational(oracle::hook_dimension(r)) / Rational(factorial(n)));
    }
  CHECK(coeffs.size() == 1 + 1 + 2 + 3 + 5);
}

TEST_CASE("bialternant evaluation") {
  const std::vector<Rational> one_two{1, 2};
  CHECK(bialternant_eval(Partition{2}, one_two) == 7);
  CHECK(bialternant_eval(Partition{1, 1}, one_two) == 2);
  for (int k = 0; k <= 5; ++k) {
    const std::vector<Rational> x{Rational(3, 2)};
    Rational expected = 1;
    for (int i = 0; i < k; ++i) expected *= x[0];
    CHECK(bialternant_eval(k == 0 ? Partition{} : Partition{k}, x) == expected);
  }
  CHECK_THROWS_AS(bialternant_eval(Partition{2}, std::vector<Rational>{1, 1}), ArgumentError);
  CHECK_THROWS_AS(bialternant_eval(Partition{1, 1, 1}, one_two), ArgumentError);

  CHECK(eval_at_power_sums(schur(Partition{2}), one_two) == 7);
  CHECK(eval_at_power_sums(p_monomial(Partition{2}), std::vector<Rational>{1, 1}) == 1);
  const std::vector<Rational> xs{1, 2, 3};
  CHECK(eval_at_power_sums(schur(Partition{2, 1}), xs) == bialternant_eval(Partition{2, 1}, xs));
}

TEST_CASE("power-sum and bialternant evaluations agree with tableaux") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> extra(0, 2);
  for (int n = 0; n <= 5; ++n)
    for (const auto& r : partitions_of(n))
      for (int trial = 0; trial < 20; ++trial) {
        const auto xs = random_points(rng, std::max<std::size_t>(1, r.length()) + extra(rng));
        const Rational expected = oracle::tableau_schur(r, xs);
        CHECK(bialternant_eval(r, xs) == expected);
        CHECK(eval_at_power_sums(schur(r), xs) == expected);
      }
}

TEST_CASE("stability under an extra zero") {
  std::mt19937_64 rng(9);
  for (int n = 0; n <= 4; ++n)
    for (const auto& r : partitions_of(n))
      for (int trial = 0; trial < 5; ++trial) {
        auto xs = random_points(rng, std::max<std::size_t>(1, r.length()) + 1);
        const Rational before = bialternant_eval(r, xs);
        xs.push_back(0);
        CHECK(bialternant_eval(r, xs) == before);
      }
}

TEST_CASE("determinant") {
  CHECK(determinant({}) == 1);
  CHECK(determinant({{2, 1}, {1, 3}}) == 5);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("ppoly json round trip") {
  const PPoly f = parse_ppoly("1/3*p1^3 + -1/3*p3").truncated(5);
  const Json doc = to_json(f);
  CHECK(doc.dump() == R"({"bound":5,"terms":[{"mono":[1,1,1],"coef":"1/3"},{"mono":[3],"coef":"-1/3"}]})");
  const PPoly back = ppoly_from_json(nlohmann::json::parse(doc.dump()));
  CHECK(back == f);
  CHECK(back.bound() == 5);
  CHECK(to_json(PPoly{}).dump() == R"({"bound":null,"terms":[]})");
}
