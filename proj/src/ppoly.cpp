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

#include "diagram_ops/ppoly.hpp"

#include <algorithm>
#include <functional>

#include "diagram_ops/errors.hpp"
#include "text_cursor.hpp"

namespace diagram_ops {

Partition monomial_product(const Partition& a, const Partition& b) {
  std::vector<int> merged;
  merged.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

std::optional<int> combine_bounds(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

PPoly::PPoly(const Rational& constant, std::optional<int> bound) : bound_(bound) {
  add_term(Partition{}, constant);
}

PPoly PPoly::monomial(const Partition& mono, const Rational& coef) {
  PPoly f;
  f.add_term(mono, coef);
  return f;
}

PPoly PPoly::variable(int k) {
  if (k < 1) throw ArgumentError("power sum index must be positive");
  return monomial(Partition{k});
}

void PPoly::set_bound(std::optional<int> bound) {
  bound_ = bound;
  if (!bound_) return;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.degree() > *bound_) it = terms_.erase(it);
    else ++it;
  }
}

PPoly PPoly::truncated(std::optional<int> bound) const {
  PPoly out = *this;
  out.set_bound(combine_bounds(bound_, bound));
  return out;
}

Rational PPoly::coeff(const Partition& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PPoly::add_term(const Partition& mono, const Rational& coef) {
  if (coef == 0) return;
  if (bound_ && mono.degree() > *bound_) return;
  auto [it, inserted] = terms_.try_emplace(mono, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

int PPoly::max_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

PPoly PPoly::homogeneous_part(int d) const {
  PPoly out;
  out.bound_ = bound_;
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

PPoly PPoly::derivative(int k) const {
  PPoly out;
  out.bound_ = bound_;
  for (const auto& [m, c] : terms_) {
    const int mult = multiplicity(m, k);
    if (mult == 0) continue;
    std::vector<int> parts = m.parts();
    parts.erase(std::find(parts.begin(), parts.end(), k));
    out.add_term(Partition(std::move(parts)), c * mult);
  }
  return out;
}

PPoly& PPoly::operator+=(const PPoly& other) {
  set_bound(combine_bounds(bound_, other.bound_));
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

PPoly& PPoly::operator-=(const PPoly& other) {
  set_bound(combine_bounds(bound_, other.bound_));
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

PPoly& PPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PPoly& PPoly::operator*=(const PPoly& other) {
  *this = *this * other;
  return *this;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
  PPoly out;
  out.bound_ = combine_bounds(a.bound_, b.bound_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (out.bound_ && ma.degree() + mb.degree() > *out.bound_) continue;
      out.add_term(monomial_product(ma, mb), ca * cb);
    }
  }
  return out;
}

std::string monomial_to_string(const Partition& mono) {
  std::string s;
  const auto& parts = mono.parts();
  // Parts are stored decreasing; print factors by increasing index.
  for (auto it = parts.rbegin(); it != parts.rend();) {
    auto run_end = std::find_if(it, parts.rend(), [&](int p) { return p != *it; });
    const auto exponent = std::distance(it, run_end);
    if (!s.empty()) s += '*';
    s += 'p' + std::to_string(*it);
    if (exponent > 1) s += '^' + std::to_string(exponent);
    it = run_end;
  }
  return s;
}

std::string to_string(const PPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    if (!m.empty()) s += '*' + monomial_to_string(m);
  }
  return s;
}

namespace {

PPoly read_term(detail::TextCursor& cur) {
  Rational coef = 1;
  std::vector<int> parts;
  bool any = false;
  do {
    if (cur.peek() == 'p') {
      cur.consume('p');
      cur.skip_ws();
      const std::size_t at = cur.position();
      const int index = cur.small_int();
      if (index < 1) throw ParseError("power sum index must be positive", at);
      int exponent = 1;
      if (cur.consume('^')) exponent = cur.small_int();
      parts.insert(parts.end(), static_cast<std::size_t>(exponent), index);
    } else if (cur.at_digit() || cur.peek() == '-') {
      coef *= cur.rational();
    } else {
      cur.fail("expected a coefficient or a power sum p<k>");
    }
    any = true;
  } while (cur.consume('*'));
  if (!any) cur.fail("empty term");
  return PPoly::monomial(Partition::from_unsorted(std::move(parts)), coef);
}

}  // namespace

PPoly parse_ppoly(std::string_view text) {
  detail::TextCursor cur(text);
  if (cur.at_end()) cur.fail("empty polynomial");
  PPoly out = read_term(cur);
  while (!cur.at_end()) {
    if (cur.consume('+')) out += read_term(cur);
    else if (cur.consume('-')) out -= read_term(cur);
    else cur.fail("expected '+' or '-'");
  }
  return out;
}

}  // namespace diagram_ops
