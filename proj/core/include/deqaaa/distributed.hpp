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

#include <vector>

#include "deqaaa/amplify.hpp"
#include "deqaaa/distribution.hpp"
#include "deqaaa/prep.hpp"
#include "deqaaa/state_vector.hpp"
#include "deqaaa/targets.hpp"

namespace deqaaa {

/// Split of n qubits into contiguous slices; node j owns qubits
/// [offset(j), offset(j) + size(j)).
class Partition {
   public:
    /// Throws DomainError unless every size is positive and 2 <= t <= n.
    explicit Partition(std::vector<int> node_sizes);

    int n_nodes() const noexcept { return static_cast<int>(sizes_.size()); }
    int n_qubits() const noexcept { return total_; }
    int size(int j) const;
    int offset(int j) const;
    /// Bits after the slice: n - offset(j) - size(j).
    int trailing(int j) const;
    const std::vector<int>& sizes() const noexcept { return sizes_; }

    /// Node j's slice of a global basis index.
    BasisIndex slice(BasisIndex x, int j) const;

   private:
    std::vector<int> sizes_;
    std::vector<int> offsets_;
    int total_ = 0;
};

/// P_j(k) = sum over all global strings whose slice j equals k.
Distribution marginal_distribution(const Distribution& P, const Partition& partition, int j);

/// sqrt(P_j(x)) amplitudes.
AmplitudeSpec substate_of(const Distribution& P_j);

/// Distinct slices of the global targets on node j.
TargetSpec project_targets(const TargetSpec& global, const Partition& partition, int j);

struct NodePlan {
    int node = 0;
    int offset = 0;
    int width = 0;
    TargetSpec local_targets;
    AmplitudeSpec substate;
    EqaaaPlan plan;
    /// Set when p_j >= kExactThreshold; the node applies nothing.
    bool skipped = false;
};

/// Throws InfeasibleError when p_j == 0.
NodePlan build_node_plan(const Distribution& P, const TargetSpec& global,
                         const Partition& partition, int j);

std::vector<NodePlan> build_node_plans(const Distribution& P, const TargetSpec& global,
                                       const Partition& partition);

/// Each node's exact amplification operator applied J_j + 1 times to its
/// slice of the global state (projector form). Throws SizeError when the
/// plans do not cover the state.
StateVector phase_one(const StateVector& state, const std::vector<NodePlan>& plans);

/// Gate form of the first phase (no global preparation). Node blocks are
/// fenced only on their own qubits so nodes stay parallel.
Circuit phase_one_circuit(int n, const std::vector<NodePlan>& plans);

double compute_pg_prime(const StateVector& state, const TargetSpec& targets);

struct DeqaaaCircuits {
    /// Global preparation followed by phase one (the composite operator B).
    Circuit phase1;
    /// phase1 plus the phase-two repetitions when `phase2` is given.
    Circuit full;
};

/// Gate form of a distributed run, built without simulating it.
DeqaaaCircuits build_deqaaa_circuits(const AmplitudeSpec& initial, const TargetSpec& targets,
                                     const std::vector<NodePlan>& nodes,
                                     const std::optional<EqaaaPlan>& phase2,
                                     bool fence_blocks = true);

struct DeqaaaReport {
    std::vector<NodePlan> nodes;
    double p_g_initial = 0.0;
    double p_g_prime = 0.0;
    bool phase2_executed = false;
    int hat_J = 0;
    double hat_phi = 0.0;
    double p_final = 0.0;
    Backend backend = Backend::kProjector;
    StateVector state_after_phase1{1};
    StateVector final_state{1};
    /// Circuit backend: global preparation followed by phase one (the
    /// composite operator B) and the complete circuit including phase two.
    std::optional<Circuit> phase1_circuit;
    std::optional<Circuit> circuit;
};

/// Two-phase distributed exact amplification. Throws DomainError when the
/// initial success probability is zero and InfeasibleError for a node with
/// zero local success probability.
DeqaaaReport deqaaa_run(const AmplitudeSpec& initial, const TargetSpec& targets,
                        const Partition& partition, const AmplifyOptions& options = {});

}  // namespace deqaaa
