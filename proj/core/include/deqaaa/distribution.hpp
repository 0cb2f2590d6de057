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
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "deqaaa/bits.hpp"
#include "deqaaa/state_vector.hpp"

namespace deqaaa {

class TargetSpec;

/// Probability mass over the 2^n_bits basis strings.
struct Distribution {
    int n_bits = 0;
    std::vector<double> probs;

    double total() const noexcept;
};

/// Measurement counts keyed by basis index.
struct Histogram {
    int n_bits = 0;
    std::uint64_t shots = 0;
    std::map<BasisIndex, std::uint64_t> counts;

    /// Relative frequencies as a full-length distribution.
    Distribution normalized() const;
};

/// |amplitude|^2 per basis state.
Distribution exact_distribution(const StateVector& state);

/// Total probability carried by the target strings. Throws DomainError on a
/// width mismatch.
double success_probability(const Distribution& dist, const TargetSpec& targets);

/// Sum of approx(x) * ln(approx(x) / exact(x)). Terms with approx(x) = 0 are
/// dropped; approx(x) > 0 with exact(x) = 0 yields +infinity.
double kl_divergence(const Distribution& approx, const Distribution& exact);

/// CSV `bitstring,value`, one row per basis state, qubit 0 first.
void write_distribution_csv(std::ostream& out, const Distribution& dist);

/// CSV `bitstring,count,probability`, only observed outcomes, ascending index.
void write_histogram_csv(std::ostream& out, const Histogram& hist);

}  // namespace deqaaa
