// Copyright 2026 The deqaaa Authors
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

#include <benchmark/benchmark.h>

#include "deqaaa/deqaaa.hpp"

namespace {

using namespace deqaaa;

void BM_DecomposeMcps(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decompose_mcps(m, 0.7, false).circuit.size());
    state.counters["gates"] = static_cast<double>(decompose_mcps(m, 0.7, false).circuit.size());
}
BENCHMARK(BM_DecomposeMcps)->DenseRange(2, 14, 4)->Unit(benchmark::kMicrosecond);

void BM_DecomposeAndMeasure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const AmplitudeSpec spec(std::vector<Complex>(std::size_t{1} << n, 1.0), true);
    const RunReport r = eqaaa_run(spec, TargetSpec(n, {8, 14}), {Backend::kCircuit});
    for (auto _ : state) benchmark::DoNotOptimize(analyze(decompose_circuit(*r.circuit)).depth);
}
BENCHMARK(BM_DecomposeAndMeasure)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace
