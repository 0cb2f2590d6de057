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

void BM_ApplyHadamard(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StateVector sv(n);
    for (auto _ : state) {
        for (int q = 0; q < n; ++q) sv.apply(gates::h(q));
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ApplyHadamard)->DenseRange(8, 20, 4);

void BM_ApplyMcps(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> controls;
    for (int q = 0; q + 1 < n; ++q) controls.push_back(q);
    StateVector sv(n);
    for (int q = 0; q < n; ++q) sv.apply(gates::h(q));
    const GateOp op = gates::mcps(controls, n - 1, 0.7);
    for (auto _ : state) {
        sv.apply(op);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
}
BENCHMARK(BM_ApplyMcps)->DenseRange(8, 20, 4);

}  // namespace
