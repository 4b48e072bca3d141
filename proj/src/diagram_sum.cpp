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

#include "diagram_ops/diagram_sum.hpp"

#include "diagram_ops/errors.hpp"
#include "text_cursor.hpp"

namespace diagram_ops {

DiagramSum::DiagramSum(const Partition& d, const Rational& coef) { add_term(d, coef); }

Rational DiagramSum::coeff(const Partition& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DiagramSum::add_term(const Partition& d, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

DiagramSum DiagramSum::graded_piece(int n) const {
  DiagramSum out;
  for (const auto& [d, c] : terms_)
    if (d.degree() == n) out.terms_.emplace(d, c);
  return out;
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, -c);
  return *this;
}

DiagramSum& DiagramSum::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= scalar;
  return *this;
}

DiagramSum rho(const Partition& d, int k) {
  if (k < 0) throw ArgumentError("rho: negative padding");
  const int r = multiplicity(d, 1);
  return DiagramSum(pad(d, k),
                    Rational(binomial(static_cast<unsigned>(r + k), static_cast<unsigned>(k))));
}

DiagramSum rho(const DiagramSum& sum, int k) {
  DiagramSum out;
  for (const auto& [d, c] : sum.terms()) out += rho(d, k) * c;
  return out;
}

std::string to_string(const DiagramSum& sum) {
  if (sum.is_zero()) return "0";
  std::string s;
  for (const auto& [d, c] : sum.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + to_string(d);
  }
  return s;
}

DiagramSum parse_diagram_sum(std::string_view text) {
  detail::TextCursor cur(text);
  DiagramSum out;
  {
    detail::TextCursor probe(text);
    if (probe.consume('0') && probe.at_end()) return out;
  }
  bool first = true;
  while (true) {
    bool negate = false;
    if (!first) {
      if (cur.consume('-')) negate = true;
      else cur.expect('+');
    }
    Rational coef = 1;
    if (cur.peek() != '[') {
      coef = cur.rational();
      cur.expect('*');
    }
    Partition d = detail::read_partition(cur);
    out.add_term(d, negate ? Rational(-coef) : coef);
    first = false;
    if (cur.at_end()) break;
  }
  return out;
}

}  // namespace diagram_ops
