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

#include "deqaaa/sampling.hpp"

#include <algorithm>

#include "deqaaa/error.hpp"

namespace deqaaa {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Rng Rng::split(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

Histogram sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw DomainError("shots must be at least 1");
    if (dist.probs.empty()) throw DomainError("empty distribution");

    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t x = 0; x < dist.probs.size(); ++x) {
        if (dist.probs[x] < 0.0) throw DomainError("negative probability");
        acc += dist.probs[x];
        cdf[x] = acc;
        if (dist.probs[x] > 0.0) last_nonzero = x;
    }
    if (!(acc > 0.0)) throw DomainError("distribution has no mass");

    Histogram h{dist.n_bits, shots, {}};
    Rng rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto x = static_cast<std::size_t>(it - cdf.begin());
        // u can land on the final plateau when trailing entries are zero.
        x = std::min(x, last_nonzero);
        ++h.counts[x];
    }
    return h;
}

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
    return sample(exact_distribution(state), shots, seed);
}

}  // namespace deqaaa
