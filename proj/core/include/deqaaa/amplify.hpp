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
#include <optional>

#include "deqaaa/circuit.hpp"
#include "deqaaa/distribution.hpp"
#include "deqaaa/prep.hpp"
#include "deqaaa/state_vector.hpp"
#include "deqaaa/targets.hpp"

namespace deqaaa {

/// Success probability at or above which amplification is skipped.
inline constexpr double kExactThreshold = 1.0 - 1e-9;

/// How reflections about the prepared state are executed.
///
/// kCircuit builds the full gate sequence (preparation, oracles, inverse
/// preparation) and simulates it. kProjector applies the diagonal oracles
/// directly and realizes A R0(phi) A^dagger as I + (e^{i phi} - 1)|psi><psi|.
enum class Backend { kCircuit, kProjector };

struct QaaaPlan {
    double p_g = 0.0;
    int r = 0;
};

struct EqaaaPlan {
    double p = 0.0;
    int J = 0;
    double phi = 0.0;

    int repetitions() const noexcept { return J + 1; }
};

/// floor(pi / (4 asin(sqrt(p_g)))). Throws DomainError unless 0 < p_g <= 1.
int iterations_qaaa(double p_g);

/// max(0, floor(pi / (4 asin(sqrt(p))) - 1/2)).
int iterations_eqaaa(double p);

/// 2 asin(sin(pi / (4J + 6)) / sqrt(p)). Throws DomainError when the asin
/// argument exceeds 1.
double phase_angle(double p, int J);

QaaaPlan plan_qaaa(double p_g);
EqaaaPlan plan_eqaaa(double p);

/// sin^2((2r + 1) asin(sqrt(p_g))).
double predicted_success_qaaa(double p_g, int r);

/// Axis-angle form of one exact amplification step in the span of the
/// target and non-target components.
struct RotationGeometry {
    double alpha = 0.0;
    double beta = 0.0;
    double n_x = 0.0;
    double n_y = 0.0;
    double n_z = 0.0;
    double omega = 0.0;
};

/// Throws DomainError outside 0 < p_g <= 1, 0 <= phi <= pi, and at the single
/// degenerate point p_g = 1, phi = pi where the operator is the identity.
RotationGeometry rotation_geometry(double p_g, double phi);

/// Diagonal oracle: e^{i phi} on every target, 1 elsewhere. One block per
/// target in order: X on the qubits where the target bit is 0, a
/// multi-controlled phase over all n qubits, the same X layer again. phi == pi
/// emits MCZ. With `fence_blocks`, a full-width barrier separates blocks.
Circuit build_phase_oracle(const TargetSpec& targets, double phi, bool fence_blocks = false);

/// e^{i phi} on |0...0>: X layer, multi-controlled phase, X layer.
Circuit build_zero_reflection(int n, double phi);

/// state + (e^{i phi} - 1) <psi|state> psi. Throws SizeError on a dimension
/// mismatch.
StateVector reflect_about_state(const StateVector& state, const StateVector& psi, double phi);

/// Per-run record shared by all three algorithms.
struct RunReport {
    std::string algorithm;
    int n_qubits = 0;
    std::vector<BasisIndex> targets;
    double p_initial = 0.0;
    int iterations = 0;
    std::optional<double> phase_angle;
    double p_final = 0.0;
    Backend backend = Backend::kProjector;
    StateVector final_state{1};
    /// Full circuit; present for the circuit backend.
    std::optional<Circuit> circuit;
};

struct AmplifyOptions {
    Backend backend = Backend::kProjector;
    /// Separate operator blocks with barriers so measured depth composes
    /// additively.
    bool fence_blocks = true;
};

/// r applications of A S0 A^dagger S_f. Throws DomainError when the initial
/// success probability is zero.
RunReport qaaa_run(const AmplitudeSpec& initial, const TargetSpec& targets,
                   const AmplifyOptions& options = {});

/// J + 1 applications of A R0(phi) A^dagger R_f(phi); skipped entirely when
/// the initial success probability is at least kExactThreshold.
RunReport eqaaa_run(const AmplitudeSpec& initial, const TargetSpec& targets,
                    const AmplifyOptions& options = {});

/// Builds the full amplification circuit for an explicit preparation
/// circuit: prep, then `repetitions` x [oracle, prep^dagger, zero reflection,
/// prep]. Shared by the runners and the depth analysis.
Circuit build_amplification_circuit(const Circuit& prep, const TargetSpec& targets, double phi,
                                    int repetitions, bool fence_blocks = true);

}  // namespace deqaaa
