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

#include <random>

#include "deqaaa/deqaaa.hpp"

namespace {

using namespace deqaaa;

AmplitudeSpec random_state(int n) {
    std::mt19937_64 g(static_cast<std::uint64_t>(n));
    std::normal_distribution<double> N(0.0, 1.0);
    std::vector<double> v(std::size_t{1} << n);
    for (auto& a : v) a = std::abs(N(g));
    return AmplitudeSpec::from_real(v, true);
}

void BM_EqaaaRun(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto backend = state.range(1) ? Backend::kCircuit : Backend::kProjector;
    const AmplitudeSpec spec = random_state(n);
    const TargetSpec t(n, {8, 14});
    for (auto _ : state) benchmark::DoNotOptimize(eqaaa_run(spec, t, {backend}).p_final);
}
BENCHMARK(BM_EqaaaRun)->ArgsProduct({{6, 8, 10}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_DeqaaaRun(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto backend = state.range(1) ? Backend::kCircuit : Backend::kProjector;
    const AmplitudeSpec spec = random_state(n);
    const TargetSpec t(n, {8, 14});
    const Partition part(std::vector<int>(n / 2, 2));
    for (auto _ : state) benchmark::DoNotOptimize(deqaaa_run(spec, t, part, {backend}).p_final);
}
BENCHMARK(BM_DeqaaaRun)->ArgsProduct({{6, 8, 10}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_EncodeAmplitudes(benchmark::State& state) {
    const AmplitudeSpec spec = random_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(encode_amplitudes(spec).size());
}
BENCHMARK(BM_EncodeAmplitudes)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

}  // namespace
