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

#ifndef DIAGRAM_OPS_W_OPS_HPP_
#define DIAGRAM_OPS_W_OPS_HPP_

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "diagram_ops/diagram_sum.hpp"
#include "diagram_ops/partition.hpp"
#include "diagram_ops/ppoly.hpp"
#include "diagram_ops/rational.hpp"

namespace diagram_ops {

// Eigenvalue of W(d) on the Schur function s_R; equals phi(R, d).
Rational eigenvalue(const Partition& d, const Partition& irrep);

// W(d) f through the Schur basis: expand f, scale the coefficient of s_R by
// phi(R, d), reassemble. Keeps the truncation bound of f.
PPoly apply_spectral(const Partition& d, const PPoly& f);
PPoly apply_spectral(const DiagramSum& x, const PPoly& f);

// One summation family of an explicit differential operator:
//   scale * sum_{indices} weight(idx) * prod p_{multiply(idx)} *
//           prod d/dp_{differentiate(idx)}
// over indices in [1, D]^arity, where D is the top degree of the operand.
// `admissible` (when set) restricts the index tuples.
struct DiffTerm {
  int arity = 0;
  Rational scale = 1;
  std::function<bool(std::span<const int>)> admissible;
  std::function<long(std::span<const int>)> weight;
  std::function<std::vector<int>(std::span<const int>)> multiply;
  std::function<std::vector<int>(std::span<const int>)> differentiate;
};

struct DiffOpSpec {
  Partition op_id;
  std::vector<DiffTerm> terms;
};

// The six closed-form operators W([1]), W([2]), W([1,1]), W([3]), W([2,1]),
// W([1,1,1]). Throws ArgumentError for any other diagram.
const DiffOpSpec& explicit_operator(const Partition& d);
const std::vector<Partition>& explicit_operator_ids();

// Term-by-term differential action of a spec.
PPoly apply_explicit(const DiffOpSpec& spec, const PPoly& f);

// (W(a) W(b) f, W(a b) f) where a b is the product of diagrams; the two are
// equal when the diagram-to-operator map is an algebra homomorphism.
std::pair<PPoly, PPoly> compose_check(const Partition& a, const Partition& b, const PPoly& f);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_W_OPS_HPP_
