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

#ifndef DIAGRAM_OPS_CLASS_ALGEBRA_HPP_
#define DIAGRAM_OPS_CLASS_ALGEBRA_HPP_

#include <vector>

#include "diagram_ops/diagram_sum.hpp"
#include "diagram_ops/partition.hpp"
#include "diagram_ops/rational.hpp"

namespace diagram_ops {

// C^{target}_{a,b}: coefficient of the class sum of `target` in the product
// of the class sums of a and b in the center of C[S_n]. Evaluated as
//   (|C_a| |C_b| / n!) sum_R chi_R(a) chi_R(b) chi_R(target) / dim R.
// Throws ArgumentError unless all three have the same degree and
// ConsistencyError if the sum is not a nonnegative integer.
Integer structure_constant(const Partition& a, const Partition& b, const Partition& target);

// a o b = sum_target C^{target}_{a,b} target, all of degree |a| = |b|.
DiagramSum mult_same_degree(const Partition& a, const Partition& b);
// Bilinear extension; every term of both sums must have the same degree.
DiagramSum mult_same_degree(const DiagramSum& a, const DiagramSum& b);

// Graded pieces {a b}_n for n = max(|a|,|b|) .. |a|+|b|, in that order:
//   {a b}_n = rho_{n-|a|}(a) o rho_{n-|b|}(b) - sum_{k<n} rho_{n-k}({a b}_k).
// Throws ResourceError when |a| + |b| exceeds limits().algebra_degree.
std::vector<DiagramSum> graded_pieces(const Partition& a, const Partition& b);

// Product in the algebra of Young diagrams of all degrees: the sum of the
// graded pieces. Memoized per ordered pair.
DiagramSum mult_infinity(const Partition& a, const Partition& b);

// Bilinear extension of mult_infinity.
DiagramSum mult_sum(const DiagramSum& a, const DiagramSum& b);

// Literal count: fix g of type `target`, count g1 of type a with
// g1^{-1} g of type b. n <= 6.
inline constexpr int kOracleMaxDegree = 6;
Integer oracle_structure_constant(const Partition& a, const Partition& b, const Partition& target);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_CLASS_ALGEBRA_HPP_
