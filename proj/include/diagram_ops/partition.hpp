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

#ifndef DIAGRAM_OPS_PARTITION_HPP_
#define DIAGRAM_OPS_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diagram_ops/rational.hpp"

namespace diagram_ops {

inline constexpr int kDefaultPartitionBound = 30;

// A Young diagram: weakly decreasing positive parts. The empty diagram is a
// valid value of degree 0. Construction validates; there is no other
// representation, so equality of parts is equality of diagrams.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Sorts the parts into canonical order first; zeros are dropped.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool operator==(const Partition& other) const noexcept {
    return parts_ == other.parts_;
  }
  // Canonical order: by degree, then reverse-lexicographic on parts, so
  // partitions of 3 come out as [3], [2,1], [1,1,1].
  std::strong_ordering operator<=>(const Partition& other) const noexcept;

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

int degree(const Partition& d);

// m_k: number of parts equal to k (k >= 1).
int multiplicity(const Partition& d, int k);

// z_d = prod_k m_k! k^{m_k}, the centralizer order of a permutation of
// cycle type d.
Integer aut_order(const Partition& d);

// 1 / aut_order(d).
Rational kappa(const Partition& d);

// Number of permutations in S_{|d|} with cycle type d.
Integer class_size(const Partition& d);

// d with k unit rows appended.
Partition pad(const Partition& d, int k);

Partition conjugate(const Partition& d);

// (-1)^{|d| - length(d)}
int sign(const Partition& d);

// All partitions of n in canonical order. Throws ResourceError when
// n > bound.
std::vector<Partition> partitions_of(int n, int bound = kDefaultPartitionBound);

// Grammar: '[' (int (',' int)*)? ']', whitespace ignored. Throws ParseError.
Partition parse_partition(std::string_view text);

std::string to_string(const Partition& d);

struct PartitionHash {
  std::size_t operator()(const Partition& d) const noexcept;
};

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_PARTITION_HPP_
