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

#include "deqaaa/metrics.hpp"

#include <algorithm>

#include "deqaaa/amplify.hpp"
#include "deqaaa/error.hpp"

namespace deqaaa {

std::size_t circuit_depth(const Circuit& circuit) {
    std::vector<std::size_t> level(static_cast<std::size_t>(circuit.n_qubits()), 0);
    std::size_t depth = 0;
    for (const auto& op : circuit.ops()) {
        const auto qs = op.qubits();
        std::size_t l = 0;
        for (int q : qs) l = std::max(l, level[q]);
        if (!op.is_barrier()) ++l;
        for (int q : qs) level[q] = l;
        depth = std::max(depth, l);
    }
    return depth;
}

DepthReport analyze(const Circuit& circuit) {
    DepthReport r;
    r.depth = circuit_depth(circuit);
    for (const auto& op : circuit.ops()) {
        if (op.is_barrier()) continue;
        ++r.gate_count;
        ++r.per_kind[std::string(gate_name(op.kind))];
    }
    return r;
}

namespace {

void check_depth_args(long long dep_A, long long m) {
    if (dep_A < 0) throw DomainError("preparation depth must be nonnegative");
    if (m < 1) throw DomainError("target count must be positive");
}

}  // namespace

long long analytic_depth_qaaa(long long dep_A, double p_g, long long m) {
    check_depth_args(dep_A, m);
    const long long r = iterations_qaaa(p_g);
    return (2 * r + 1) * dep_A + r * (3 * m + 3);
}

long long analytic_depth_eqaaa(long long dep_A, double p_g, long long m) {
    check_depth_args(dep_A, m);
    const long long J = iterations_eqaaa(p_g);
    return (2 * J + 3) * dep_A + (J + 1) * (3 * m + 3);
}

DeqaaaDepth analytic_depth_deqaaa(long long dep_A, const std::vector<NodeDepthInput>& nodes,
                                  double p_g_prime, long long m_global) {
    check_depth_args(dep_A, m_global);
    long long widest = 0;
    for (const auto& nd : nodes) {
        check_depth_args(nd.dep_prep, nd.local_targets);
        const long long J = iterations_eqaaa(nd.p);
        widest = std::max(widest, (J + 1) * (3 * nd.local_targets + 2 * nd.dep_prep + 3));
    }
    DeqaaaDepth d;
    d.first_phase = dep_A + widest;
    if (p_g_prime < kExactThreshold) {
        const long long J = iterations_eqaaa(p_g_prime);
        d.second_phase = (J + 1) * (3 * m_global + 2 * d.first_phase + 3);
    }
    d.total = d.first_phase + d.second_phase;
    return d;
}

}  // namespace deqaaa
