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

#include "diagram_ops/w_ops.hpp"

#include <map>

#include "diagram_ops/characters.hpp"
#include "diagram_ops/class_algebra.hpp"
#include "diagram_ops/errors.hpp"
#include "diagram_ops/psym.hpp"

namespace diagram_ops {

Rational eigenvalue(const Partition& d, const Partition& irrep) { return phi(irrep, d); }

PPoly apply_spectral(const DiagramSum& x, const PPoly& f) {
  SchurCoefficients coeffs = schur_expand(f);
  for (auto& [r, c] : coeffs) {
    Rational scale = 0;
    for (const auto& [d, w] : x.terms()) scale += w * phi(r, d);
    c *= scale;
  }
  std::erase_if(coeffs, [](const auto& kv) { return kv.second == 0; });
  return from_schur(coeffs, f.bound());
}

PPoly apply_spectral(const Partition& d, const PPoly& f) {
  return apply_spectral(DiagramSum(d), f);
}

namespace {

using Idx = std::span<const int>;

DiffTerm term(int arity, Rational scale, std::function<long(Idx)> weight,
              std::function<std::vector<int>(Idx)> multiply,
              std::function<std::vector<int>(Idx)> differentiate,
              std::function<bool(Idx)> admissible = nullptr) {
  DiffTerm t;
  t.arity = arity;
  t.scale = std::move(scale);
  t.weight = std::move(weight);
  t.multiply = std::move(multiply);
  t.differentiate = std::move(differentiate);
  t.admissible = std::move(admissible);
  return t;
}

std::map<Partition, DiffOpSpec> build_specs() {
  std::map<Partition, DiffOpSpec> specs;

  // W([1]) = sum_k k p_k d/dp_k
  specs[{1}] = {{1},
                {term(
                    1, 1, [](Idx i) { return long{i[0]}; },
                    [](Idx i) { return std::vector{i[0]}; },
                    [](Idx i) { return std::vector{i[0]}; })}};

  // W([2]) = 1/2 sum_{a,b} ((a+b) p_a p_b d/dp_{a+b} + ab p_{a+b} d2/dp_a dp_b)
  specs[{2}] = {{2},
                {term(
                     2, Rational(1, 2), [](Idx i) { return long{i[0] + i[1]}; },
                     [](Idx i) { return std::vector{i[0], i[1]}; },
                     [](Idx i) { return std::vector{i[0] + i[1]}; }),
                 term(
                     2, Rational(1, 2), [](Idx i) { return long{i[0]} * i[1]; },
                     [](Idx i) { return std::vector{i[0] + i[1]}; },
                     [](Idx i) { return std::vector{i[0], i[1]}; })}};

  // W([1,1]) = 1/2 (sum_a a(a-1) p_a d/dp_a + sum_{a,b} ab p_a p_b d2/dp_a dp_b)
  specs[{1, 1}] = {{1, 1},
                   {term(
                        1, Rational(1, 2), [](Idx i) { return long{i[0]} * (i[0] - 1); },
                        [](Idx i) { return std::vector{i[0]}; },
                        [](Idx i) { return std::vector{i[0]}; }),
                    term(
                        2, Rational(1, 2), [](Idx i) { return long{i[0]} * i[1]; },
                        [](Idx i) { return std::vector{i[0], i[1]}; },
                        [](Idx i) { return std::vector{i[0], i[1]}; })}};

  // W([3]) = 1/3 sum_{a,b,c} abc p_{a+b+c} d3/dp_a dp_b dp_c
  //        + 1/2 sum_{a+b=c+d} cd (1 - delta_ac delta_bd) p_a p_b d2/dp_c dp_d
  //        + 1/3 sum_{a,b,c} (a+b+c) (p_a p_b p_c + p_{a+b+c}) d/dp_{a+b+c}
  specs[{3}] = {
      {3},
      {term(
           3, Rational(1, 3), [](Idx i) { return long{i[0]} * i[1] * i[2]; },
           [](Idx i) { return std::vector{i[0] + i[1] + i[2]}; },
           [](Idx i) { return std::vector{i[0], i[1], i[2]}; }),
       term(
           4, Rational(1, 2), [](Idx i) { return long{i[2]} * i[3]; },
           [](Idx i) { return std::vector{i[0], i[1]}; },
           [](Idx i) { return std::vector{i[2], i[3]}; },
           [](Idx i) { return i[0] + i[1] == i[2] + i[3] && !(i[0] == i[2] && i[1] == i[3]); }),
       term(
           3, Rational(1, 3), [](Idx i) { return long{i[0] + i[1] + i[2]}; },
           [](Idx i) { return std::vector{i[0], i[1], i[2]}; },
           [](Idx i) { return std::vector{i[0] + i[1] + i[2]}; }),
       term(
           3, Rational(1, 3), [](Idx i) { return long{i[0] + i[1] + i[2]}; },
           [](Idx i) { return std::vector{i[0] + i[1] + i[2]}; },
           [](Idx i) { return std::vector{i[0] + i[1] + i[2]}; })}};

  // W([2,1]) = 1/2 sum_{a,b} (a+b)(a+b-2) p_a p_b d/dp_{a+b}
  //          + 1/2 sum_{a,b} ab(a+b-2) p_{a+b} d2/dp_a dp_b
  //          + 1/2 sum_{a,b,c} (a+b)c p_a p_b p_c d2/dp_{a+b} dp_c
  //          + 1/2 sum_{a,b,c} abc p_a p_{b+c} d3/dp_a dp_b dp_c
  specs[{2, 1}] = {
      {2, 1},
      {term(
           2, Rational(1, 2), [](Idx i) { return long{i[0] + i[1]} * (i[0] + i[1] - 2); },
           [](Idx i) { return std::vector{i[0], i[1]}; },
           [](Idx i) { return std::vector{i[0] + i[1]}; }),
       term(
           2, Rational(1, 2), [](Idx i) { return long{i[0]} * i[1] * (i[0] + i[1] - 2); },
           [](Idx i) { return std::vector{i[0] + i[1]}; },
           [](Idx i) { return std::vector{i[0], i[1]}; }),
       term(
           3, Rational(1, 2), [](Idx i) { return long{i[0] + i[1]} * i[2]; },
           [](Idx i) { return std::vector{i[0], i[1], i[2]}; },
           [](Idx i) { return std::vector{i[0] + i[1], i[2]}; }),
       term(
           3, Rational(1, 2), [](Idx i) { return long{i[0]} * i[1] * i[2]; },
           [](Idx i) { return std::vector{i[0], i[1] + i[2]}; },
           [](Idx i) { return std::vector{i[0], i[1], i[2]}; })}};

  // W([1,1,1]) = 1/6 sum_a a(a-1)(a-2) p_a d/dp_a
  //            + 1/4 sum_{a,b} ab(a+b-2) p_a p_b d2/dp_a dp_b
  //            + 1/6 sum_{a,b,c} abc p_a p_b p_c d3/dp_a dp_b dp_c
  specs[{1, 1, 1}] = {
      {1, 1, 1},
      {term(
           1, Rational(1, 6), [](Idx i) { return long{i[0]} * (i[0] - 1) * (i[0] - 2); },
           [](Idx i) { return std::vector{i[0]}; },
           [](Idx i) { return std::vector{i[0]}; }),
       term(
           2, Rational(1, 4), [](Idx i) { return long{i[0]} * i[1] * (i[0] + i[1] - 2); },
           [](Idx i) { return std::vector{i[0], i[1]}; },
           [](Idx i) { return std::vector{i[0], i[1]}; }),
       term(
           3, Rational(1, 6), [](Idx i) { return long{i[0]} * i[1] * i[2]; },
           [](Idx i) { return std::vector{i[0], i[1], i[2]}; },
           [](Idx i) { return std::vector{i[0], i[1], i[2]}; })}};
  return specs;
}

const std::map<Partition, DiffOpSpec>& specs() {
  static const std::map<Partition, DiffOpSpec> instance = build_specs();
  return instance;
}

// Applies prod d/dp_k for k in `ks` to a single monomial, returning the
// surviving monomial and its integer multiplier (0 if it vanishes).
std::pair<Partition, long> differentiate_monomial(const Partition& mono, std::span<const int> ks) {
  std::vector<int> parts = mono.parts();
  long factor = 1;
  for (int k : ks) {
    auto it = std::find(parts.begin(), parts.end(), k);
    if (it == parts.end()) return {Partition{}, 0};
    factor *= std::count(parts.begin(), parts.end(), k);
    parts.erase(it);
  }
  return {Partition(std::move(parts)), factor};
}

}  // namespace

const DiffOpSpec& explicit_operator(const Partition& d) {
  auto it = specs().find(d);
  if (it == specs().end())
    throw ArgumentError("no closed-form operator for " + to_string(d) +
                        "; use the spectral route");
  return it->second;
}

const std::vector<Partition>& explicit_operator_ids() {
  static const std::vector<Partition> ids{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
  return ids;
}

PPoly apply_explicit(const DiffOpSpec& spec, const PPoly& f) {
  PPoly out = PPoly().truncated(f.bound());
  const int top = f.max_degree();
  if (top < 1) return out;

  for (const DiffTerm& t : spec.terms) {
    std::vector<int> idx(static_cast<std::size_t>(t.arity), 1);
    while (true) {
      if (!t.admissible || t.admissible(idx)) {
        const std::vector<int> ks = t.differentiate(idx);
        bool in_range = true;
        for (int k : ks) in_range = in_range && k <= top;
        const long w = in_range ? t.weight(idx) : 0;
        if (w != 0) {
          const Partition factor = Partition::from_unsorted(t.multiply(idx));
          for (const auto& [mono, c] : f.terms()) {
            auto [rest, mult] = differentiate_monomial(mono, ks);
            if (mult == 0) continue;
            out.add_term(monomial_product(rest, factor), c * t.scale * (w * mult));
          }
        }
      }
      // Odometer over [1, top]^arity.
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] > top) idx[pos++] = 1;
      if (pos == idx.size()) break;
    }
  }
  return out;
}

std::pair<PPoly, PPoly> compose_check(const Partition& a, const Partition& b, const PPoly& f) {
  PPoly sequential = apply_spectral(a, apply_spectral(b, f));
  PPoly product = apply_spectral(mult_infinity(a, b), f);
  return {std::move(sequential), std::move(product)};
}

}  // namespace diagram_ops
