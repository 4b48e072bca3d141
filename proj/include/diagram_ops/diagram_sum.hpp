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

#ifndef DIAGRAM_OPS_DIAGRAM_SUM_HPP_
#define DIAGRAM_OPS_DIAGRAM_SUM_HPP_

#include <map>
#include <string>
#include <string_view>

#include "diagram_ops/partition.hpp"
#include "diagram_ops/rational.hpp"

namespace diagram_ops {

// Finitely supported formal sum of Young diagrams with rational
// coefficients. Zero coefficients are never stored.
class DiagramSum {
 public:
  using Terms = std::map<Partition, Rational>;

  DiagramSum() = default;
  explicit DiagramSum(const Partition& d, const Rational& coef = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  // Coefficient of d (zero when absent).
  Rational coeff(const Partition& d) const;

  void add_term(const Partition& d, const Rational& coef);

  // All terms with |d| == n.
  DiagramSum graded_piece(int n) const;

  DiagramSum& operator+=(const DiagramSum& other);
  DiagramSum& operator-=(const DiagramSum& other);
  DiagramSum& operator*=(const Rational& scalar);

  friend DiagramSum operator+(DiagramSum a, const DiagramSum& b) { return a += b; }
  friend DiagramSum operator-(DiagramSum a, const DiagramSum& b) { return a -= b; }
  friend DiagramSum operator*(DiagramSum a, const Rational& s) { return a *= s; }
  friend DiagramSum operator*(const Rational& s, DiagramSum a) { return a *= s; }

  bool operator==(const DiagramSum& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

// rho_k(d) = ((r+k)! / (r! k!)) [d, 1^k] with r the number of unit rows of d.
DiagramSum rho(const Partition& d, int k);
// Linear extension of rho_k; every term is padded by the same k.
DiagramSum rho(const DiagramSum& sum, int k);

// "2*[2] + 1*[2,1]"; the zero sum prints as "0".
std::string to_string(const DiagramSum& sum);

// Accepts the output grammar of to_string plus bare partitions ("[2]" means
// 1*[2]) and '-' between terms. Throws ParseError.
DiagramSum parse_diagram_sum(std::string_view text);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_DIAGRAM_SUM_HPP_
