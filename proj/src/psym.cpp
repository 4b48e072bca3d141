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

#include "diagram_ops/psym.hpp"

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "diagram_ops/characters.hpp"
#include "diagram_ops/errors.hpp"

namespace diagram_ops {

PPoly p_monomial(const Partition& d) { return PPoly::monomial(d, kappa(d)); }

PPoly complete_homogeneous(int i) {
  if (i < 0) return PPoly();
  static std::mutex mutex;
  static std::vector<PPoly> cache{PPoly(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= i) {
    const int n = static_cast<int>(cache.size());
    PPoly next;
    for (int k = 1; k <= n; ++k) next += PPoly::variable(k) * cache[static_cast<std::size_t>(n - k)];
    next *= Rational(1, n);
    cache.push_back(std::move(next));
  }
  return cache[static_cast<std::size_t>(i)];
}

namespace {

// Laplace expansion along rows with the set of used columns memoized.
class JacobiTrudi {
 public:
  explicit JacobiTrudi(const Partition& irrep) : len_(static_cast<int>(irrep.length())) {
    cells_.resize(static_cast<std::size_t>(len_ * len_));
    for (int i = 0; i < len_; ++i)
      for (int j = 0; j < len_; ++j)
        cells_[static_cast<std::size_t>(i * len_ + j)] =
            complete_homogeneous(irrep[static_cast<std::size_t>(i)] + j - i);
  }

  PPoly determinant() { return minor(0); }

 private:
  PPoly minor(std::uint32_t used) {
    const int row = std::popcount(used);
    if (row == len_) return PPoly(1);
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    PPoly total;
    int skipped = 0;
    for (int col = 0; col < len_; ++col) {
      if (used & (1u << col)) {
        ++skipped;
        continue;
      }
      const PPoly& cell = cells_[static_cast<std::size_t>(row * len_ + col)];
      if (cell.is_zero()) continue;
      // Sign of the column among the columns still free.
      const int position = col - skipped;
      PPoly term = cell * minor(used | (1u << col));
      if (position % 2) total -= term;
      else total += term;
    }
    memo_.emplace(used, total);
    return total;
  }

  int len_;
  std::vector<PPoly> cells_;
  std::unordered_map<std::uint32_t, PPoly> memo_;
};

}  // namespace

PPoly schur(const Partition& irrep) {
  if (irrep.length() > 30) throw ResourceError("schur: too many rows");
  static std::mutex mutex;
  static std::map<Partition, PPoly> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(irrep); it != memo.end()) return it->second;
  }
  PPoly value = JacobiTrudi(irrep).determinant();
  std::lock_guard lock(mutex);
  return memo.try_emplace(irrep, std::move(value)).first->second;
}

PPoly schur_from_characters(const Partition& irrep) {
  PPoly out;
  for (const Partition& d : partitions_of(irrep.degree()))
    out.add_term(d, kappa(d) * static_cast<long>(character(irrep, d)));
  return out;
}

SchurCoefficients schur_expand(const PPoly& f) {
  SchurCoefficients out;
  std::map<int, std::vector<std::pair<Partition, Rational>>> by_degree;
  for (const auto& [m, c] : f.terms()) by_degree[m.degree()].emplace_back(m, c);
  for (const auto& [n, terms] : by_degree) {
    const auto table = char_table(n);
    for (std::size_t r = 0; r < table->size(); ++r) {
      Rational sum = 0;
      for (const auto& [m, c] : terms) sum += c * static_cast<long>(table->at(r, table->index_of(m)));
      if (sum != 0) out.emplace(table->order()[r], sum);
    }
  }
  return out;
}

PPoly from_schur(const SchurCoefficients& coeffs, std::optional<int> bound) {
  PPoly out = PPoly().truncated(bound);
  for (const auto& [r, c] : coeffs) {
    if (bound && r.degree() > *bound) continue;
    out += schur(r) * c;
  }
  return out;
}

PPoly exp_p1(int bound) {
  if (bound < 0) throw ArgumentError("exp_p1: negative bound");
  PPoly out = PPoly(1).truncated(bound);
  for (int n = 1; n <= bound; ++n)
    out.add_term(pad(Partition{}, n), make_rational(1, factorial(static_cast<unsigned>(n))));
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

namespace {

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Rational bialternant_eval(const Partition& irrep, std::span<const Rational> xs) {
  const std::size_t n = xs.size();
  if (n < irrep.length())
    throw ArgumentError("bialternant: need at least " + std::to_string(irrep.length()) + " points");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (xs[i] == xs[j]) throw ArgumentError("bialternant: evaluation points must be distinct");

  std::vector<std::vector<Rational>> num(n, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> den(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int part = j < irrep.length() ? irrep[j] : 0;
      const int shift = static_cast<int>(n - 1 - j);
      num[i][j] = power(xs[i], part + shift);
      den[i][j] = power(xs[i], shift);
    }
  }
  return determinant(std::move(num)) / determinant(std::move(den));
}

Rational eval_at_power_sums(const PPoly& f, std::span<const Rational> xs) {
  std::vector<Rational> sums(static_cast<std::size_t>(std::max(f.max_degree(), 0) + 1));
  for (std::size_t k = 1; k < sums.size(); ++k)
    for (const Rational& x : xs) sums[k] += power(x, static_cast<int>(k));
  Rational total = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational term = c;
    for (int part : m.parts()) term *= sums[static_cast<std::size_t>(part)];
    total += term;
  }
  return total;
}

}  // namespace diagram_ops
