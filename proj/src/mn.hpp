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

#ifndef DIAGRAM_OPS_SRC_MN_HPP_
#define DIAGRAM_OPS_SRC_MN_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "diagram_ops/partition.hpp"

namespace diagram_ops::detail {

// Murnaghan-Nakayama evaluator with a memo on (remaining shape, remaining
// class parts). One instance per thread; the memo is not synchronized.
class MnEvaluator {
 public:
  std::int64_t operator()(const Partition& irrep, const Partition& cls);

 private:
  std::int64_t eval(const std::vector<int>& shape, std::span<const int> parts);

  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo_;
};

}  // namespace diagram_ops::detail

#endif  // DIAGRAM_OPS_SRC_MN_HPP_
