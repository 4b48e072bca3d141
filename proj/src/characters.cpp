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

#include "diagram_ops/characters.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "diagram_ops/config.hpp"
#include "diagram_ops/errors.hpp"
#include "diagram_ops/json_io.hpp"
#include "diagram_ops/kernels.hpp"
#include "mn.hpp"

namespace diagram_ops {

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama

namespace detail {

std::int64_t MnEvaluator::operator()(const Partition& irrep, const Partition& cls) {
  if (irrep.degree() != cls.degree())
    throw ArgumentError("character: degree mismatch between " + to_string(irrep) +
                        " and " + to_string(cls));
  return eval(irrep.parts(), cls.parts());
}

// Border strips are removed through first-column hook lengths (beta
// numbers): removing a strip of length r moves one bead from b to b - r, and
// the strip height is the number of beads strictly between.
std::int64_t MnEvaluator::eval(const std::vector<int>& shape, std::span<const int> parts) {
  if (parts.empty()) return shape.empty() ? 1 : 0;
  if (parts.size() == 1 && shape.size() == 1) return 1;

  auto key = std::make_pair(shape, std::vector<int>(parts.begin(), parts.end()));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int r = parts.front();
  const int len = static_cast<int>(shape.size());
  std::vector<int> beta(shape.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0) continue;
    if (std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > to && b < from) ++between;

    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> next;
    next.reserve(moved.size());
    for (int j = 0; j < len; ++j) {
      int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = eval(next, parts.subspan(1));
    total += (between % 2 == 0) ? sub : -sub;
  }
  memo_.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

std::int64_t murnaghan_nakayama(const Partition& irrep, const Partition& cls) {
  detail::MnEvaluator mn;
  return mn(irrep, cls);
}

// ---------------------------------------------------------------------------
// CharacterTable

CharacterTable::CharacterTable(int n, std::vector<std::int64_t> entries)
    : n_(n), order_(partitions_of(n)), entries_(std::move(entries)) {
  if (entries_.size() != order_.size() * order_.size())
    throw ArgumentError("character table: wrong number of entries");
  for (std::size_t i = 0; i < order_.size(); ++i) index_.emplace(order_[i], i);
}

std::size_t CharacterTable::index_of(const Partition& d) const {
  auto it = index_.find(d);
  if (it == index_.end())
    throw ArgumentError("partition " + to_string(d) + " is not of degree " + std::to_string(n_));
  return it->second;
}

// ---------------------------------------------------------------------------
// Scalar quantities

std::int64_t character(const Partition& irrep, const Partition& cls) {
  if (irrep.degree() != cls.degree())
    throw ArgumentError("character: degree mismatch between " + to_string(irrep) +
                        " and " + to_string(cls));
  if (irrep.degree() <= limits().char_table_degree.load())
    return char_table(irrep.degree())->at(irrep, cls);
  return murnaghan_nakayama(irrep, cls);
}

Integer dimension(const Partition& irrep) {
  return Integer(static_cast<long>(character(irrep, pad(Partition{}, irrep.degree()))));
}

Rational d_R(const Partition& irrep) {
  return make_rational(dimension(irrep), factorial(static_cast<unsigned>(irrep.degree())));
}

Rational d_R_product_formula(const Partition& irrep) {
  const int size = irrep.degree();
  std::vector<long> mu(static_cast<std::size_t>(size), 0);
  for (std::size_t i = 0; i < irrep.length(); ++i) mu[i] = irrep[i];
  Integer num = 1;
  Integer den = 1;
  // 1-based i, j as in the closed form.
  for (int i = 1; i <= size; ++i) {
    for (int j = i + 1; j <= size; ++j)
      num *= mu[static_cast<std::size_t>(i - 1)] - mu[static_cast<std::size_t>(j - 1)] - i + j;
    den *= factorial(static_cast<unsigned>(mu[static_cast<std::size_t>(i - 1)] + size - i));
  }
  return make_rational(num, den);
}

Rational phi(const Partition& irrep, const Partition& cls) {
  const int k = irrep.degree() - cls.degree();
  if (k < 0) return 0;
  Rational value = kappa(cls) * Rational(Integer(static_cast<long>(character(irrep, pad(cls, k)))));
  value /= d_R(irrep) * Rational(factorial(static_cast<unsigned>(k)));
  return value;
}

// ---------------------------------------------------------------------------
// Disk cache

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int n) {
  return dir / ("chartab_" + std::to_string(n) + ".json");
}

namespace {

// Deterministic choice of the row recomputed on load.
std::size_t spot_check_row(int n, std::size_t rows) {
  std::mt19937_64 rng(0x5eed'c4a2'7ab1'e000ull ^ static_cast<std::uint64_t>(n));
  return static_cast<std::size_t>(rng() % rows);
}

}  // namespace

namespace {

// Sum over classes of |C| chi_a chi_b must be n! when a = b and 0 otherwise.
bool rows_orthonormal(const CharacterTable& table) {
  const auto& order = table.order();
  const std::size_t p = order.size();
  std::vector<Integer> sizes;
  sizes.reserve(p);
  for (const auto& c : order) sizes.push_back(class_size(c));
  const Integer group_order = factorial(static_cast<unsigned>(table.n()));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a; b < p; ++b) {
      Integer sum = 0;
      for (std::size_t c = 0; c < p; ++c)
        sum += sizes[c] * Integer(static_cast<long>(table.at(a, c))) *
               Integer(static_cast<long>(table.at(b, c)));
      if (sum != (a == b ? group_order : Integer(0))) return false;
    }
  return true;
}

}  // namespace

std::optional<CharacterTable> load_cached_table(const std::filesystem::path& file, int n) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("n").get<int>() != n) return std::nullopt;
    const auto order = partitions_of(n);
    const auto& listed = doc.at("order");
    if (listed.size() != order.size()) return std::nullopt;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (parse_partition(listed[i].get<std::string>()) != order[i]) return std::nullopt;
    const auto& rows = doc.at("rows");
    if (rows.size() != order.size()) return std::nullopt;
    std::vector<std::int64_t> entries;
    entries.reserve(order.size() * order.size());
    for (const Partition& r : order) {
      const auto& row = rows.at(to_string(r));
      if (row.size() != order.size()) return std::nullopt;
      for (const auto& v : row) {
        const auto text = v.get<std::string>();
        std::size_t used = 0;
        const long long value = std::stoll(text, &used);
        if (used != text.size()) return std::nullopt;
        entries.push_back(value);
      }
    }
    CharacterTable table(n, std::move(entries));
    const std::size_t r = spot_check_row(n, order.size());
    detail::MnEvaluator mn;
    for (std::size_t c = 0; c < order.size(); ++c)
      if (mn(order[r], order[c]) != table.at(r, c)) return std::nullopt;
    if (!rows_orthonormal(table)) return std::nullopt;
    return table;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_table(const std::filesystem::path& file, const CharacterTable& table) {
  const Json doc = to_json(table);
  std::filesystem::create_directories(file.parent_path());
  // Write-then-rename so concurrent readers never see a partial file.
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id();
  auto tmp = file;
  tmp += suffix.str();
  {
    std::ofstream out(tmp);
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

// ---------------------------------------------------------------------------
// Memoized tables

namespace {

struct TableMemo {
  std::mutex mutex;
  std::map<int, std::shared_ptr<const CharacterTable>> tables;
};

TableMemo& table_memo() {
  static TableMemo memo;
  return memo;
}

std::shared_ptr<const CharacterTable> build_table(int n) {
  const auto dir = cache_directory();
  if (dir) {
    const auto file = cache_file_path(*dir, n);
    const bool present = std::filesystem::exists(file);
    if (auto loaded = load_cached_table(file, n))
      return std::make_shared<const CharacterTable>(std::move(*loaded));
    if (present)
      std::cerr << "warning: character table cache " << file.string()
                << " is corrupt; recomputing\n";
  }
  auto table = std::make_shared<const CharacterTable>(
      n, kernels::character_table_entries(n, kernels::Exec::parallel));
  if (dir) {
    try {
      store_table(cache_file_path(*dir, n), *table);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write character table cache: " << e.what() << '\n';
    }
  }
  return table;
}

}  // namespace

std::shared_ptr<const CharacterTable> char_table(int n) {
  if (n < 0) throw ArgumentError("char_table: negative degree");
  const int bound = limits().char_table_degree.load();
  if (n > bound)
    throw ResourceError("character table degree " + std::to_string(n) + " exceeds bound " +
                        std::to_string(bound));
  auto& memo = table_memo();
  {
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.tables.find(n); it != memo.tables.end()) return it->second;
  }
  // Built outside the lock; content is deterministic so a racing duplicate
  // build is harmless.
  auto table = build_table(n);
  std::lock_guard lock(memo.mutex);
  return memo.tables.try_emplace(n, std::move(table)).first->second;
}

void clear_character_memo() {
  auto& memo = table_memo();
  std::lock_guard lock(memo.mutex);
  memo.tables.clear();
}

// ---------------------------------------------------------------------------
// Configuration

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace {

struct CacheDirSetting {
  std::mutex mutex;
  bool explicitly_set = false;
  std::optional<std::filesystem::path> dir;
};

CacheDirSetting& cache_dir_setting() {
  static CacheDirSetting setting;
  return setting;
}

}  // namespace

void set_cache_directory(std::optional<std::filesystem::path> dir) {
  auto& s = cache_dir_setting();
  std::lock_guard lock(s.mutex);
  s.explicitly_set = true;
  s.dir = std::move(dir);
}

void reset_cache_directory() {
  auto& s = cache_dir_setting();
  std::lock_guard lock(s.mutex);
  s.explicitly_set = false;
  s.dir.reset();
}

std::optional<std::filesystem::path> cache_directory() {
  auto& s = cache_dir_setting();
  std::lock_guard lock(s.mutex);
  if (s.explicitly_set) return s.dir;
  if (const char* env = std::getenv("DIAGRAM_OPS_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".diagram-ops-cache");
}

}  // namespace diagram_ops
