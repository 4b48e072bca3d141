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

#include "diagram_ops/permutation.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

#include "diagram_ops/errors.hpp"

namespace diagram_ops {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Partition cycle_type(const Permutation& p) {
  std::vector<int> cycles;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    cycles.push_back(len);
  }
  return Partition::from_unsorted(std::move(cycles));
}

Permutation canonical_representative(const Partition& type) {
  Permutation p = identity_permutation(type.degree());
  std::size_t start = 0;
  for (int len : type.parts()) {
    for (int i = 0; i < len; ++i)
      p[start + static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(start + static_cast<std::size_t>((i + 1) % len));
    start += static_cast<std::size_t>(len);
  }
  return p;
}

const std::map<Partition, std::vector<Permutation>>& permutations_by_type(int n) {
  if (n < 0 || n > kMaxEnumerationDegree)
    throw ResourceError("permutation enumeration limited to n <= " +
                        std::to_string(kMaxEnumerationDegree));
  using Table = std::map<Partition, std::vector<Permutation>>;
  static std::array<std::once_flag, kMaxEnumerationDegree + 1> flags;
  static std::array<std::unique_ptr<Table>, kMaxEnumerationDegree + 1> tables;
  const auto idx = static_cast<std::size_t>(n);
  std::call_once(flags[idx], [&] {
    auto table = std::make_unique<Table>();
    for (const Partition& d : partitions_of(n)) (*table)[d];
    Permutation p = identity_permutation(n);
    do {
      (*table)[cycle_type(p)].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    tables[idx] = std::move(table);
  });
  return *tables[idx];
}

}  // namespace diagram_ops
