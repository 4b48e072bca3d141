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

#ifndef DIAGRAM_OPS_PSYM_HPP_
#define DIAGRAM_OPS_PSYM_HPP_

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "diagram_ops/partition.hpp"
#include "diagram_ops/ppoly.hpp"
#include "diagram_ops/rational.hpp"

namespace diagram_ops {

// Coefficients c_R of f = sum_R c_R s_R in the Schur basis.
using SchurCoefficients = std::map<Partition, Rational>;

// kappa(d) p_d
PPoly p_monomial(const Partition& d);

// P_i with exp(sum_k p_k x^k / k) = sum_i P_i x^i; P_0 = 1 and P_i = 0 for
// i < 0. Computed from i P_i = sum_{k=1}^{i} p_k P_{i-k}.
PPoly complete_homogeneous(int i);

// Jacobi-Trudi: det[P_{R_i + j - i}], expanded exactly. Memoized.
PPoly schur(const Partition& irrep);

// sum_{|d| = |R|} chi_R(d) p_d / z_d. Equal to schur(R); kept as the
// character-side route for cross-checks.
PPoly schur_from_characters(const Partition& irrep);

// Degree by degree: the coefficient of s_R is sum_d a_d chi_R(d) where
// f_n = sum_d a_d p_d. Zero coefficients are omitted.
SchurCoefficients schur_expand(const PPoly& f);

// sum_R c_R schur(R), with an optional truncation bound on the result.
PPoly from_schur(const SchurCoefficients& coeffs, std::optional<int> bound = std::nullopt);

// sum_{n <= N} p_1^n / n!, carrying bound N.
PPoly exp_p1(int bound);

// det[x_i^{R_j + n - j}] / det[x_i^{n - j}] with n = xs.size() >= length(R).
// Throws ArgumentError on repeated points or too few points.
Rational bialternant_eval(const Partition& irrep, std::span<const Rational> xs);

// Substitutes p_k = sum_j xs_j^k.
Rational eval_at_power_sums(const PPoly& f, std::span<const Rational> xs);

// Exact determinant by fraction-based Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_PSYM_HPP_
