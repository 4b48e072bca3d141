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

#include "diagram_ops/kernels.hpp"

#include <omp.h>

#include <string>

#include "diagram_ops/characters.hpp"
#include "diagram_ops/errors.hpp"
#include "diagram_ops/permutation.hpp"
#include "mn.hpp"

namespace diagram_ops::kernels {

std::vector<std::int64_t> character_table_entries(int n, Exec exec) {
  const auto order = partitions_of(n);
  const auto p = static_cast<std::ptrdiff_t>(order.size());
  std::vector<std::int64_t> entries(order.size() * order.size());

  auto fill_row = [&](std::ptrdiff_t r) {
    detail::MnEvaluator mn;
    for (std::ptrdiff_t c = 0; c < p; ++c)
      entries[static_cast<std::size_t>(r * p + c)] =
          mn(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(c)]);
  };

  if (exec == Exec::serial) {
    for (std::ptrdiff_t r = 0; r < p; ++r) fill_row(r);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t r = 0; r < p; ++r) fill_row(r);
  }
  return entries;
}

namespace {

// Counts completions of `prefix` through slots [slot, k-1) such that the
// inverse of the running product has the type of the last slot.
std::uint64_t extend(const std::vector<const std::vector<Permutation>*>& slots,
                     const Partition& last_type, std::size_t slot, const Permutation& prefix) {
  if (slot == slots.size()) return cycle_type(prefix) == last_type ? 1 : 0;
  std::uint64_t count = 0;
  for (const Permutation& g : *slots[slot]) count += extend(slots, last_type, slot + 1, compose(prefix, g));
  return count;
}

}  // namespace

Integer count_identity_tuples(std::span<const Partition> classes, int n, Exec exec) {
  for (const Partition& c : classes)
    if (c.degree() != n)
      throw ArgumentError("tuple count: class " + to_string(c) + " is not of degree " +
                          std::to_string(n));
  if (n > kMaxEnumerationDegree)
    throw ResourceError("tuple enumeration limited to n <= " + std::to_string(kMaxEnumerationDegree));
  if (classes.empty()) return 1;

  const auto& by_type = permutations_by_type(n);
  std::vector<const std::vector<Permutation>*> slots;
  double search = 1.0;
  for (std::size_t i = 0; i + 1 < classes.size(); ++i) {
    const auto* members = &by_type.at(classes[i]);
    slots.push_back(members);
    search *= static_cast<double>(members->size());
  }
  if (search > kMaxTupleSearch)
    throw ResourceError("tuple enumeration space too large (" + std::to_string(search) + ")");
  const Partition& last_type = classes.back();
  const Permutation id = identity_permutation(n);
  if (slots.empty()) return cycle_type(id) == last_type ? 1 : 0;

  const auto& first = *slots.front();
  const auto count = static_cast<std::ptrdiff_t>(first.size());
  std::uint64_t total = 0;
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i)
      total += extend(slots, last_type, 1, first[static_cast<std::size_t>(i)]);
  } else {
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total)
    for (std::ptrdiff_t i = 0; i < count; ++i)
      total += extend(slots, last_type, 1, first[static_cast<std::size_t>(i)]);
  }
  return Integer(static_cast<unsigned long>(total));
}

std::vector<Integer> structure_constant_tensor(int n, Exec exec) {
  const auto table = char_table(n);
  const auto& order = table->order();
  const auto p = static_cast<std::ptrdiff_t>(order.size());
  const Integer n_fact = factorial(static_cast<unsigned>(n));

  std::vector<Integer> dims(order.size());
  std::vector<Integer> sizes(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    dims[i] = Integer(static_cast<long>(table->at(i, order.size() - 1)));
    sizes[i] = class_size(order[i]);
  }

  std::vector<Integer> out(order.size() * order.size() * order.size());
  auto fill = [&](std::ptrdiff_t i) {
    for (std::ptrdiff_t j = 0; j < p; ++j) {
      for (std::ptrdiff_t l = 0; l < p; ++l) {
        Rational sum = 0;
        for (std::ptrdiff_t r = 0; r < p; ++r) {
          const auto ur = static_cast<std::size_t>(r);
          Integer prod = Integer(static_cast<long>(table->at(ur, static_cast<std::size_t>(i)))) *
                         static_cast<long>(table->at(ur, static_cast<std::size_t>(j))) *
                         static_cast<long>(table->at(ur, static_cast<std::size_t>(l)));
          sum += make_rational(prod, dims[ur]);
        }
        sum *= make_rational(sizes[static_cast<std::size_t>(i)] * sizes[static_cast<std::size_t>(j)], n_fact);
        if (sum.get_den() != 1 || sum < 0)
          throw ConsistencyError("structure constant for " + to_string(order[static_cast<std::size_t>(i)]) +
                                 ", " + to_string(order[static_cast<std::size_t>(j)]) + " -> " +
                                 to_string(order[static_cast<std::size_t>(l)]) +
                                 " is not a nonnegative integer: " + to_string(sum));
        out[static_cast<std::size_t>((i * p + j) * p + l)] = sum.get_num();
      }
    }
  };

  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < p; ++i) fill(i);
  } else {
    // Exceptions must not escape an OpenMP region; collect the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < p; ++i) {
      try {
        fill(i);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace diagram_ops::kernels
