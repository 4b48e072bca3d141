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

#ifndef DIAGRAM_OPS_RATIONAL_HPP_
#define DIAGRAM_OPS_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace diagram_ops {

// Exact rationals and integers are GMP values. mpq_class keeps itself
// canonical as long as every constructor from parts is followed by
// canonicalize(); the helpers below do that.
using Rational = mpq_class;
using Integer = mpz_class;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// "a" or "a/b" in lowest terms, denominator positive.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Parses "a" or "a/b" (optional leading '-'). Throws ParseError.
Rational parse_rational(std::string_view text);

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_RATIONAL_HPP_
