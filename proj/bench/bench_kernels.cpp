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

// Serial vs OpenMP timings for the three parallel kernels.

#include <benchmark/benchmark.h>

#include "diagram_ops/hurwitz.hpp"
#include "diagram_ops/kernels.hpp"
#include "diagram_ops/partition.hpp"

namespace {

using diagram_ops::Partition;
using diagram_ops::kernels::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::parallel : Exec::serial; }

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(diagram_ops::kernels::character_table_entries(n, exec_of(state)));
}
BENCHMARK(BM_CharacterTable)->ArgsProduct({{8, 10, 12}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_StructureTensor(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(diagram_ops::kernels::structure_constant_tensor(n, exec_of(state)));
}
BENCHMARK(BM_StructureTensor)->ArgsProduct({{5, 6, 7}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_IdentityTuples(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Partition> classes(4, diagram_ops::pad(Partition{2}, n - 2));
  for (auto _ : state)
    benchmark::DoNotOptimize(diagram_ops::kernels::count_identity_tuples(classes, n, exec_of(state)));
}
BENCHMARK(BM_IdentityTuples)->ArgsProduct({{4, 5, 6}, {0, 1}})->ArgNames({"n", "parallel"});

void BM_GeneratingFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<Partition> dirs{Partition{2}, Partition{3}};
  for (auto _ : state)
    benchmark::DoNotOptimize(diagram_ops::generating_function(dirs, n, 3, exec_of(state)));
}
BENCHMARK(BM_GeneratingFunction)->ArgsProduct({{5, 7}, {0, 1}})->ArgNames({"p_bound", "parallel"});

}  // namespace

BENCHMARK_MAIN();
