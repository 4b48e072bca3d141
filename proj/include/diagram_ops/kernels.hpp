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

#ifndef DIAGRAM_OPS_KERNELS_HPP_
#define DIAGRAM_OPS_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "diagram_ops/partition.hpp"
#include "diagram_ops/rational.hpp"

// Data-parallel inner loops. Every kernel has a serial reference path that
// the tests compare the OpenMP path against; results are identical because
// all arithmetic is exact and reductions happen in a fixed order.
namespace diagram_ops::kernels {

enum class Exec { serial, parallel };

// Row-major chi_R(Delta), rows and columns in partitions_of(n) order.
// Parallel over rows.
std::vector<std::int64_t> character_table_entries(int n, Exec exec = Exec::parallel);

// #{(g_1, ..., g_k) : g_i has cycle type classes[i], g_1 ... g_k = id} in
// S_n, by explicit enumeration. Parallel over the first slot. Throws
// ResourceError when n > kMaxEnumerationDegree or the search space exceeds
// kMaxTupleSearch.
inline constexpr double kMaxTupleSearch = 4.0e8;
Integer count_identity_tuples(std::span<const Partition> classes, int n,
                              Exec exec = Exec::parallel);

// C^{l}_{i,j} for all partitions of n, flattened as [(i * p + j) * p + l]
// with p = number of partitions of n, via the character sum. Parallel over i.
std::vector<Integer> structure_constant_tensor(int n, Exec exec = Exec::parallel);

}  // namespace diagram_ops::kernels

#endif  // DIAGRAM_OPS_KERNELS_HPP_
