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

#pragma once

#include <cstdint>
#include <random>

#include "deqaaa/distribution.hpp"
#include "deqaaa/state_vector.hpp"

namespace deqaaa {

/// Seeded generator used for measurement sampling.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard, seeded with SplitMix64(seed). Uniform doubles are built from
/// the top 53 bits of each draw, so results do not depend on the standard
/// library's distribution implementations. `split(k)` derives an independent
/// child stream from (seed, k).
class Rng {
   public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform();

    Rng split(std::uint64_t stream) const;

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// One step of the SplitMix64 output function.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// `shots` i.i.d. draws from exact_distribution(state) by inverse CDF.
/// Sequential; identical (state, shots, seed) give identical histograms.
/// Throws DomainError when shots == 0.
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// Same as sample() but from an explicit distribution.
Histogram sample(const Distribution& dist, std::uint64_t shots, std::uint64_t seed);

}  // namespace deqaaa
