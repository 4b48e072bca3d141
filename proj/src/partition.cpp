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

#include "diagram_ops/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "diagram_ops/errors.hpp"
#include "text_cursor.hpp"

namespace diagram_ops {
namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw ArgumentError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw ArgumentError("partition parts must be weakly decreasing");
  }
}

void generate(int remaining, int max_part, std::vector<int>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  validate(parts_);
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const noexcept {
  if (degree_ != other.degree_) return degree_ <=> other.degree_;
  // Larger leading parts sort first.
  return std::lexicographical_compare_three_way(
      other.parts_.begin(), other.parts_.end(), parts_.begin(), parts_.end());
}

int degree(const Partition& d) { return d.degree(); }

int multiplicity(const Partition& d, int k) {
  return static_cast<int>(std::count(d.parts().begin(), d.parts().end(), k));
}

Integer aut_order(const Partition& d) {
  Integer z = 1;
  const auto& p = d.parts();
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    unsigned m = static_cast<unsigned>(j - i);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(p[i]), m);
    z *= factorial(m) * power;
    i = j;
  }
  return z;
}

Rational kappa(const Partition& d) { return make_rational(1, aut_order(d)); }

Integer class_size(const Partition& d) {
  return factorial(static_cast<unsigned>(d.degree())) / aut_order(d);
}

Partition pad(const Partition& d, int k) {
  if (k < 0) throw ArgumentError("pad: negative row count");
  std::vector<int> parts = d.parts();
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& d) {
  std::vector<int> parts;
  if (!d.empty()) {
    parts.resize(static_cast<std::size_t>(d[0]), 0);
    for (int row : d.parts())
      for (int c = 0; c < row; ++c) ++parts[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(parts));
}

int sign(const Partition& d) {
  return ((d.degree() - static_cast<int>(d.length())) % 2 == 0) ? 1 : -1;
}

std::vector<Partition> partitions_of(int n, int bound) {
  if (n < 0) throw ArgumentError("partitions_of: negative degree");
  if (n > bound)
    throw ResourceError("partitions_of: degree " + std::to_string(n) +
                        " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

namespace detail {

Partition read_partition(TextCursor& cur) {
  cur.expect('[');
  std::vector<int> parts;
  if (!cur.consume(']')) {
    while (true) {
      cur.skip_ws();
      std::size_t at = cur.position();
      int part = cur.small_int();
      if (part < 1) throw ParseError("parts must be positive", at);
      if (!parts.empty() && part > parts.back())
        throw ParseError("parts must be weakly decreasing", at);
      parts.push_back(part);
      if (cur.consume(']')) break;
      cur.expect(',');
    }
  }
  return Partition(std::move(parts));
}

}  // namespace detail

Partition parse_partition(std::string_view text) {
  detail::TextCursor cur(text);
  Partition d = detail::read_partition(cur);
  if (!cur.at_end()) cur.fail("trailing characters after partition");
  return d;
}

std::string to_string(const Partition& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  s += ']';
  return s;
}

std::size_t PartitionHash::operator()(const Partition& d) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int p : d.parts()) {
    h ^= static_cast<std::size_t>(p);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace diagram_ops
