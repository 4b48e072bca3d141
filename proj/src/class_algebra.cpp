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

#include "diagram_ops/class_algebra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "diagram_ops/characters.hpp"
#include "diagram_ops/config.hpp"
#include "diagram_ops/errors.hpp"
#include "diagram_ops/permutation.hpp"

namespace diagram_ops {
namespace {

template <typename Value>
class PairMemo {
 public:
  template <typename Compute>
  std::shared_ptr<const Value> get(const Partition& a, const Partition& b, Compute&& compute) {
    auto key = std::make_pair(a, b);
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    auto value = std::make_shared<const Value>(compute());
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<Partition, Partition>, std::shared_ptr<const Value>> memo_;
};

PairMemo<DiagramSum>& same_degree_memo() {
  static PairMemo<DiagramSum> memo;
  return memo;
}

PairMemo<std::vector<DiagramSum>>& graded_memo() {
  static PairMemo<std::vector<DiagramSum>> memo;
  return memo;
}

void require_same_degree(const Partition& a, const Partition& b) {
  if (a.degree() != b.degree())
    throw ArgumentError("class product: degrees differ for " + to_string(a) + " and " +
                        to_string(b));
}

DiagramSum compute_same_degree(const Partition& a, const Partition& b) {
  const int n = a.degree();
  const auto table = char_table(n);
  const auto& order = table->order();
  const std::size_t ia = table->index_of(a);
  const std::size_t ib = table->index_of(b);
  const std::size_t id_col = order.size() - 1;

  // weight_R = chi_R(a) chi_R(b) / dim R
  std::vector<Rational> weight(order.size());
  for (std::size_t r = 0; r < order.size(); ++r)
    weight[r] = make_rational(Integer(static_cast<long>(table->at(r, ia))) *
                                  static_cast<long>(table->at(r, ib)),
                              Integer(static_cast<long>(table->at(r, id_col))));
  const Rational prefactor =
      make_rational(class_size(a) * class_size(b), factorial(static_cast<unsigned>(n)));

  DiagramSum out;
  for (std::size_t t = 0; t < order.size(); ++t) {
    Rational sum = 0;
    for (std::size_t r = 0; r < order.size(); ++r)
      if (weight[r] != 0) sum += weight[r] * static_cast<long>(table->at(r, t));
    sum *= prefactor;
    if (sum.get_den() != 1 || sum < 0)
      throw ConsistencyError("structure constant C^" + to_string(order[t]) + "_{" +
                             to_string(a) + "," + to_string(b) +
                             "} is not a nonnegative integer: " + to_string(sum));
    out.add_term(order[t], sum);
  }
  return out;
}

}  // namespace

Integer structure_constant(const Partition& a, const Partition& b, const Partition& target) {
  require_same_degree(a, b);
  require_same_degree(a, target);
  return mult_same_degree(a, b).coeff(target).get_num();
}

DiagramSum mult_same_degree(const Partition& a, const Partition& b) {
  require_same_degree(a, b);
  return *same_degree_memo().get(a, b, [&] { return compute_same_degree(a, b); });
}

DiagramSum mult_same_degree(const DiagramSum& a, const DiagramSum& b) {
  DiagramSum out;
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) out += mult_same_degree(da, db) * (ca * cb);
  return out;
}

std::vector<DiagramSum> graded_pieces(const Partition& a, const Partition& b) {
  const int lo = std::max(a.degree(), b.degree());
  const int hi = a.degree() + b.degree();
  const int bound = limits().algebra_degree.load();
  if (hi > bound)
    throw ResourceError("product degree " + std::to_string(hi) + " exceeds bound " +
                        std::to_string(bound));
  return *graded_memo().get(a, b, [&] {
    std::vector<DiagramSum> pieces;
    for (int n = lo; n <= hi; ++n) {
      DiagramSum piece =
          mult_same_degree(rho(a, n - a.degree()), rho(b, n - b.degree()));
      for (int k = lo; k < n; ++k)
        piece -= rho(pieces[static_cast<std::size_t>(k - lo)], n - k);
      pieces.push_back(std::move(piece));
    }
    return pieces;
  });
}

DiagramSum mult_infinity(const Partition& a, const Partition& b) {
  DiagramSum out;
  for (const DiagramSum& piece : graded_pieces(a, b)) out += piece;
  return out;
}

DiagramSum mult_sum(const DiagramSum& a, const DiagramSum& b) {
  DiagramSum out;
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) out += mult_infinity(da, db) * (ca * cb);
  return out;
}

Integer oracle_structure_constant(const Partition& a, const Partition& b, const Partition& target) {
  require_same_degree(a, b);
  require_same_degree(a, target);
  const int n = a.degree();
  if (n > kOracleMaxDegree)
    throw ResourceError("structure-constant oracle limited to n <= " +
                        std::to_string(kOracleMaxDegree));
  const Permutation g = canonical_representative(target);
  unsigned long count = 0;
  for (const Permutation& g1 : permutations_by_type(n).at(a))
    if (cycle_type(compose(inverse(g1), g)) == b) ++count;
  return Integer(count);
}

}  // namespace diagram_ops
