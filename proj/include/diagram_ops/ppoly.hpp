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

#ifndef DIAGRAM_OPS_PPOLY_HPP_
#define DIAGRAM_OPS_PPOLY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "diagram_ops/partition.hpp"
#include "diagram_ops/rational.hpp"

namespace diagram_ops {

// Order on monomials p_Lambda: by graded degree |Lambda|, then
// lexicographically increasing parts, so p1^3 < p1*p2 < p3.
struct MonomialOrder {
  bool operator()(const Partition& a, const Partition& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.parts() < b.parts();
  }
};

// p_a * p_b as a merged exponent partition.
Partition monomial_product(const Partition& a, const Partition& b);

// Sparse polynomial in the power sums p_1, p_2, ... with rational
// coefficients. The key Lambda stands for prod_i p_{Lambda_i}, of graded
// degree |Lambda|. An optional truncation bound N drops every monomial of
// degree > N; it propagates through arithmetic as the minimum of the
// operand bounds. Equality compares terms only.
class PPoly {
 public:
  using Terms = std::map<Partition, Rational, MonomialOrder>;

  PPoly() = default;
  explicit PPoly(const Rational& constant, std::optional<int> bound = std::nullopt);

  static PPoly monomial(const Partition& mono, const Rational& coef = 1);
  static PPoly variable(int k);

  const Terms& terms() const noexcept { return terms_; }
  std::optional<int> bound() const noexcept { return bound_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Applies a (tighter) bound: monomials above it are dropped.
  PPoly truncated(std::optional<int> bound) const;

  Rational coeff(const Partition& mono) const;
  void add_term(const Partition& mono, const Rational& coef);

  // Highest graded degree present; -1 for the zero polynomial.
  int max_degree() const;
  PPoly homogeneous_part(int d) const;

  // d/dp_k
  PPoly derivative(int k) const;

  PPoly& operator+=(const PPoly& other);
  PPoly& operator-=(const PPoly& other);
  PPoly& operator*=(const Rational& s);
  PPoly& operator*=(const PPoly& other);

  friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
  friend PPoly operator-(PPoly a, const PPoly& b) { return a -= b; }
  friend PPoly operator*(PPoly a, const Rational& s) { return a *= s; }
  friend PPoly operator*(const Rational& s, PPoly a) { return a *= s; }
  friend PPoly operator*(const PPoly& a, const PPoly& b);

  bool operator==(const PPoly& other) const { return terms_ == other.terms_; }

 private:
  void set_bound(std::optional<int> bound);

  Terms terms_;
  std::optional<int> bound_;
};

// min with nullopt meaning "no bound".
std::optional<int> combine_bounds(std::optional<int> a, std::optional<int> b);

// "1/3*p1^3 + -1/3*p3"; constants print bare, zero prints "0".
std::string to_string(const PPoly& f);
std::string monomial_to_string(const Partition& mono);

// Accepts to_string output plus '-', implicit coefficient 1 and repeated
// factors ("p1*p1"). Throws ParseError.
PPoly parse_ppoly(std::string_view text);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_PPOLY_HPP_
