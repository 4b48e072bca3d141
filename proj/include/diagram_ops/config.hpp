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

#ifndef DIAGRAM_OPS_CONFIG_HPP_
#define DIAGRAM_OPS_CONFIG_HPP_

#include <atomic>
#include <filesystem>
#include <optional>

namespace diagram_ops {

inline constexpr int kDefaultCharTableBound = 12;
inline constexpr int kDefaultAlgebraBound = 12;

// Process-wide size guards. The CLI raises or lowers these from
// --max-degree; library users normally leave the defaults.
struct Limits {
  std::atomic<int> char_table_degree{kDefaultCharTableBound};
  std::atomic<int> algebra_degree{kDefaultAlgebraBound};
};

Limits& limits();

// Character-table disk cache location. Resolution order: an explicit
// set_cache_directory() call, $DIAGRAM_OPS_CACHE_DIR, ".diagram-ops-cache".
// std::nullopt disables the disk cache (in-memory memoization remains).
void set_cache_directory(std::optional<std::filesystem::path> dir);
// Forget any explicit setting and resolve from the environment again.
void reset_cache_directory();
std::optional<std::filesystem::path> cache_directory();

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_CONFIG_HPP_
