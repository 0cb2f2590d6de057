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

#include <map>
#include <string>
#include <vector>

#include "deqaaa/circuit.hpp"
#include "deqaaa/state_vector.hpp"

namespace deqaaa {

struct DepthReport {
    std::size_t gate_count = 0;
    std::size_t depth = 0;
    std::map<std::string, std::size_t> per_kind;
};

/// ASAP layering: a gate lands one layer after the latest gate on any of its
/// qubits (controls included). Every gate, whatever its width, occupies one
/// layer. Barriers align their qubits without adding a layer.
std::size_t circuit_depth(const Circuit& circuit);

/// Gate count (barriers excluded), depth and counts per gate kind.
DepthReport analyze(const Circuit& circuit);

/// (2r + 1) dep_A + r (3m + 3) with r = iterations_qaaa(p_g).
long long analytic_depth_qaaa(long long dep_A, double p_g, long long m);

/// (2J + 3) dep_A + (J + 1)(3m + 3) with J = iterations_eqaaa(p_g).
long long analytic_depth_eqaaa(long long dep_A, double p_g, long long m);

struct NodeDepthInput {
    long long dep_prep = 0;
    double p = 0.0;
    long long local_targets = 0;
};

struct DeqaaaDepth {
    long long first_phase = 0;
    long long second_phase = 0;
    long long total = 0;
};

/// First phase dep_A + max_j (J_j + 1)(3|X_j| + 2 dep_prep_j + 3); second
/// phase (J' + 1)(3m + 2 first + 3), omitted when p_g_prime >= 1 - 1e-9.
DeqaaaDepth analytic_depth_deqaaa(long long dep_A, const std::vector<NodeDepthInput>& nodes,
                                  double p_g_prime, long long m_global);

struct DecompositionResult {
    Circuit circuit;
    int controls = 0;
    double phi = 0.0;
    /// Deviation from the direct gate up to global phase; negative when the
    /// check was skipped because the gate is too wide for a dense matrix.
    double max_deviation = -1.0;
};

/// Ancilla-free {PS, CNOT} realization of a phase gate with `m` controls
/// acting on qubits 0..m (qubit m is the target).
///
/// C^m PS(phi) on (c_1..c_m, t) is a Gray-code sweep that accumulates the
/// parity of every control subset into t and applies PS(+-phi / 2^m) to it,
/// followed by C^{m-1} PS(phi / 2) on the controls with c_m as the target.
/// For m = 1 this is PS(phi/2) t, CNOT, PS(-phi/2) t, CNOT, PS(phi/2) c.
/// Exact, not just up to phase. Throws DomainError for m < 0.
DecompositionResult decompose_mcps(int m, double phi, bool verify = true);

/// Appends the decomposition of C^m PS(phi) on explicit qubits.
void append_mcps_decomposition(Circuit& out, const std::vector<int>& controls, int target,
                               double phi);

/// Appends a {RY, CNOT} realization of C^m RY(theta): a uniformly controlled
/// rotation with 2^m RY(+-theta / 2^m) and 2^m CNOTs in Gray-code order.
void append_mcry_decomposition(Circuit& out, const std::vector<int>& controls, int target,
                               double theta);

/// Expands every gate with two or more controls (MCPS, MCZ as MCPS(pi),
/// MCRY) and the one-control MCPS/MCRY/MCZ forms; other gates pass through.
Circuit decompose_circuit(const Circuit& circuit);

}  // namespace deqaaa
