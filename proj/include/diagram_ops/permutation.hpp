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

#ifndef DIAGRAM_OPS_PERMUTATION_HPP_
#define DIAGRAM_OPS_PERMUTATION_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "diagram_ops/partition.hpp"

namespace diagram_ops {

// Explicit permutations of {0..n-1}; used only by the enumeration oracles.
inline constexpr int kMaxEnumerationDegree = 7;

using Permutation = std::vector<std::uint8_t>;

// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(int n);
Partition cycle_type(const Permutation& p);

// A fixed representative: cycles on consecutive points in part order.
Permutation canonical_representative(const Partition& type);

// Every permutation of S_n grouped by cycle type. Cached per n; n must not
// exceed kMaxEnumerationDegree.
const std::map<Partition, std::vector<Permutation>>& permutations_by_type(int n);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_PERMUTATION_HPP_
