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

#ifndef DIAGRAM_OPS_SELFTEST_HPP_
#define DIAGRAM_OPS_SELFTEST_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "diagram_ops/json_io.hpp"

namespace diagram_ops {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

enum class SelftestLevel { quick, full };

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, for the report
};

struct SelftestReport {
  SelftestLevel level = SelftestLevel::quick;
  std::uint64_t seed = kDefaultSeed;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

// Oracle-equivalence suites: quick covers degrees <= 4, full degrees <= 6.
// Sampling is driven by `seed` only, so reports are reproducible.
SelftestReport run_selftest(SelftestLevel level, std::uint64_t seed = kDefaultSeed);

Json to_json(const SelftestReport& report);

}  // namespace diagram_ops

#endif  // DIAGRAM_OPS_SELFTEST_HPP_
