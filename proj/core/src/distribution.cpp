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

#include "deqaaa/distribution.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "deqaaa/error.hpp"
#include "deqaaa/targets.hpp"

namespace deqaaa {

double Distribution::total() const noexcept {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

Distribution Histogram::normalized() const {
    if (shots == 0) throw DomainError("empty histogram");
    Distribution d{n_bits, std::vector<double>(std::size_t{1} << n_bits, 0.0)};
    for (const auto& [x, c] : counts) {
        d.probs[x] = static_cast<double>(c) / static_cast<double>(shots);
    }
    return d;
}

Distribution exact_distribution(const StateVector& state) {
    Distribution d{state.n_qubits(), {}};
    d.probs.reserve(state.dim());
    for (const auto& a : state.amplitudes()) d.probs.push_back(std::norm(a));
    return d;
}

double success_probability(const Distribution& dist, const TargetSpec& targets) {
    if (targets.n_bits() != dist.n_bits) {
        throw DomainError("targets have width " + std::to_string(targets.n_bits()) +
                          ", distribution has " + std::to_string(dist.n_bits));
    }
    double p = 0.0;
    for (BasisIndex x : targets.indices()) p += dist.probs[x];
    return p;
}

double kl_divergence(const Distribution& approx, const Distribution& exact) {
    if (approx.n_bits != exact.n_bits || approx.probs.size() != exact.probs.size()) {
        throw DomainError("distributions have different widths");
    }
    double d = 0.0;
    for (std::size_t x = 0; x < approx.probs.size(); ++x) {
        const double a = approx.probs[x];
        if (a <= 0.0) continue;
        const double e = exact.probs[x];
        if (e <= 0.0) return std::numeric_limits<double>::infinity();
        d += a * std::log(a / e);
    }
    return d;
}

void write_distribution_csv(std::ostream& out, const Distribution& dist) {
    const auto old = out.precision(17);
    out << "bitstring,value\n";
    for (std::size_t x = 0; x < dist.probs.size(); ++x) {
        out << to_bitstring(x, dist.n_bits) << ',' << dist.probs[x] << '\n';
    }
    out.precision(old);
}

void write_histogram_csv(std::ostream& out, const Histogram& hist) {
    const auto old = out.precision(17);
    out << "bitstring,count,probability\n";
    for (const auto& [x, c] : hist.counts) {
        out << to_bitstring(x, hist.n_bits) << ',' << c << ','
            << static_cast<double>(c) / static_cast<double>(hist.shots) << '\n';
    }
    out.precision(old);
}

}  // namespace deqaaa
