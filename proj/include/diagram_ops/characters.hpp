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

#ifndef DIAGRAM_OPS_CHARACTERS_HPP_
#define DIAGRAM_OPS_CHARACTERS_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "diagram_ops/partition.hpp"
#include "diagram_ops/rational.hpp"

namespace diagram_ops {

// chi_R(Delta) for all R, Delta of degree n. Rows and columns both follow
// partitions_of(n) order.
class CharacterTable {
 public:
  CharacterTable(int n, std::vector<std::int64_t> entries);

  int n() const noexcept { return n_; }
  const std::vector<Partition>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }

  // Throws ArgumentError for a partition of the wrong degree.
  std::size_t index_of(const Partition& d) const;

  std::int64_t at(std::size_t irrep, std::size_t cls) const {
    return entries_[irrep * order_.size() + cls];
  }
  std::int64_t at(const Partition& irrep, const Partition& cls) const {
    return at(index_of(irrep), index_of(cls));
  }
  std::span<const std::int64_t> row(std::size_t irrep) const {
    return {entries_.data() + irrep * order_.size(), order_.size()};
  }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  bool operator==(const CharacterTable& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  int n_;
  std::vector<Partition> order_;
  std::unordered_map<Partition, std::size_t, PartitionHash> index_;
  std::vector<std::int64_t> entries_;
};

// Border-strip recursion, parts of `cls` removed largest first. No table
// lookup; this is what the tables are built from.
std::int64_t murnaghan_nakayama(const Partition& irrep, const Partition& cls);

// chi_R(Delta); served from char_table when |R| is within the table bound.
// Throws ArgumentError on degree mismatch.
std::int64_t character(const Partition& irrep, const Partition& cls);

Integer dimension(const Partition& irrep);

// dim R / |R|!
Rational d_R(const Partition& irrep);

// prod_{i<j} (mu_i - mu_j - i + j) / prod_i (mu_i + N - i)! with N = |R| and
// mu padded by zeros to length N. Must agree with d_R.
Rational d_R_product_formula(const Partition& irrep);

// Eigenvalue of W(Delta) on the Schur function of R:
//   kappa(Delta) chi_R([Delta, 1^k]) / (d_R k!),  k = |R| - |Delta| >= 0,
// and 0 when |R| < |Delta|.
Rational phi(const Partition& irrep, const Partition& cls);

// Memoized table for degree n, read from / written to the disk cache when
// one is configured. Throws ResourceError above limits().char_table_degree.
std::shared_ptr<const CharacterTable> char_table(int n);

// Disk cache plumbing, exposed for tests and the CLI.
std::filesystem::path cache_file_path(const std::filesystem::path& dir, int n);
// nullopt when the file is missing, malformed or fails the spot check.
std::optional<CharacterTable> load_cached_table(const std::filesystem::path& file, int n);
void store_table(const std::filesystem::path& file, const CharacterTable& table);

// Drops in-memory character tables so the next char_table() call goes back
// to disk.
void clear_character_memo();

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_CHARACTERS_HPP_
