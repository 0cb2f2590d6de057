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

#include "deqaaa/distributed.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "deqaaa/error.hpp"

namespace deqaaa {

Partition::Partition(std::vector<int> node_sizes) : sizes_(std::move(node_sizes)) {
    if (sizes_.size() < 2) throw DomainError("a partition needs at least two nodes");
    for (int s : sizes_) {
        if (s < 1) throw DomainError("node sizes must be positive");
        offsets_.push_back(total_);
        total_ += s;
        if (total_ > kMaxStateQubits) throw SizeError("partition covers too many qubits");
    }
}

int Partition::size(int j) const {
    if (j < 0 || j >= n_nodes()) throw IndexError("node " + std::to_string(j) + " out of range");
    return sizes_[j];
}

int Partition::offset(int j) const {
    size(j);
    return offsets_[j];
}

int Partition::trailing(int j) const { return total_ - offset(j) - size(j); }

BasisIndex Partition::slice(BasisIndex x, int j) const {
    return (x >> trailing(j)) & ((BasisIndex{1} << size(j)) - 1);
}

Distribution marginal_distribution(const Distribution& P, const Partition& partition, int j) {
    if (P.n_bits != partition.n_qubits()) {
        throw SizeError("distribution width differs from partition width");
    }
    const int w = partition.size(j);
    const int sigma = partition.trailing(j);
    const BasisIndex mask = (BasisIndex{1} << w) - 1;
    Distribution out{w, std::vector<double>(std::size_t{1} << w, 0.0)};
    for (BasisIndex x = 0; x < P.probs.size(); ++x) out.probs[(x >> sigma) & mask] += P.probs[x];
    return out;
}

AmplitudeSpec substate_of(const Distribution& P_j) {
    std::vector<double> a(P_j.probs.size());
    std::transform(P_j.probs.begin(), P_j.probs.end(), a.begin(),
                   [](double p) { return std::sqrt(std::max(p, 0.0)); });
    return AmplitudeSpec::from_real(a, true);
}

TargetSpec project_targets(const TargetSpec& global, const Partition& partition, int j) {
    if (global.n_bits() != partition.n_qubits()) {
        throw SizeError("target width differs from partition width");
    }
    std::set<BasisIndex> local;
    for (BasisIndex x : global.indices()) local.insert(partition.slice(x, j));
    return TargetSpec(partition.size(j), {local.begin(), local.end()});
}

NodePlan build_node_plan(const Distribution& P, const TargetSpec& global,
                         const Partition& partition, int j) {
    const Distribution Pj = marginal_distribution(P, partition, j);
    TargetSpec local = project_targets(global, partition, j);
    double p = success_probability(Pj, local);
    if (!(p > 0.0)) {
        throw InfeasibleError("node " + std::to_string(j) +
                              " has zero probability on its local targets");
    }
    p = std::min(p, 1.0);
    const bool skipped = p >= kExactThreshold;
    EqaaaPlan plan = skipped ? EqaaaPlan{p, 0, 0.0} : plan_eqaaa(p);
    return NodePlan{j, partition.offset(j), partition.size(j), std::move(local), substate_of(Pj),
                    plan, skipped};
}

std::vector<NodePlan> build_node_plans(const Distribution& P, const TargetSpec& global,
                                       const Partition& partition) {
    std::vector<NodePlan> out;
    for (int j = 0; j < partition.n_nodes(); ++j) {
        out.push_back(build_node_plan(P, global, partition, j));
    }
    return out;
}

namespace {

void check_cover(int n, const std::vector<NodePlan>& plans) {
    int next = 0;
    for (const auto& p : plans) {
        if (p.offset != next || p.width != p.substate.n_qubits() ||
            p.width != p.local_targets.n_bits()) {
            throw SizeError("node plans do not tile the register");
        }
        next += p.width;
    }
    if (next != n) throw SizeError("node plans do not cover the register");
}

// Phase on every global basis state whose node slice lies in the local targets.
void apply_local_oracle(StateVector& s, const NodePlan& p, Complex phase) {
    const int sigma = s.n_qubits() - p.offset - p.width;
    const BasisIndex mask = (BasisIndex{1} << p.width) - 1;
    auto a = s.amplitudes();
    for (BasisIndex x = 0; x < a.size(); ++x) {
        if (p.local_targets.contains((x >> sigma) & mask)) a[x] *= phase;
    }
}

// I + (e^{i phi} - 1) |phi_j><phi_j| on the node slice.
void apply_local_reflection(StateVector& s, const NodePlan& p, double phi) {
    const int n = s.n_qubits();
    const int sigma = n - p.offset - p.width;
    const std::size_t inner = std::size_t{1} << sigma;
    const std::size_t local = std::size_t{1} << p.width;
    const std::size_t outer = std::size_t{1} << p.offset;
    const auto& v = p.substate.amps();
    const Complex k = std::polar(1.0, phi) - 1.0;
    auto a = s.amplitudes();
    for (std::size_t u = 0; u < outer; ++u) {
        for (std::size_t w = 0; w < inner; ++w) {
            const std::size_t base = (u * local) * inner + w;
            Complex ov{};
            for (std::size_t y = 0; y < local; ++y) ov += std::conj(v[y]) * a[base + y * inner];
            ov *= k;
            for (std::size_t y = 0; y < local; ++y) a[base + y * inner] += ov * v[y];
        }
    }
}

}  // namespace

StateVector phase_one(const StateVector& state, const std::vector<NodePlan>& plans) {
    check_cover(state.n_qubits(), plans);
    StateVector s = state;
    for (const auto& p : plans) {
        if (p.skipped) continue;
        const Complex ph = std::polar(1.0, p.plan.phi);
        for (int i = 0; i < p.plan.repetitions(); ++i) {
            apply_local_oracle(s, p, ph);
            apply_local_reflection(s, p, p.plan.phi);
        }
    }
    return s;
}

Circuit phase_one_circuit(int n, const std::vector<NodePlan>& plans) {
    check_cover(n, plans);
    Circuit c(n);
    for (const auto& p : plans) {
        if (p.skipped) continue;
        std::vector<int> own(p.width);
        std::iota(own.begin(), own.end(), p.offset);
        const Circuit prep = encode_amplitudes(p.substate);
        const Circuit prep_dg = prep.inverse();
        const Circuit oracle = build_phase_oracle(p.local_targets, p.plan.phi, true);
        const Circuit zero = build_zero_reflection(p.width, p.plan.phi);
        bool first = true;
        auto block = [&](const Circuit& b) {
            if (!first) c.append(gates::barrier(own));
            first = false;
            c.append_shifted(b, p.offset);
        };
        for (int i = 0; i < p.plan.repetitions(); ++i) {
            block(oracle);
            block(prep_dg);
            block(zero);
            block(prep);
        }
    }
    return c;
}

double compute_pg_prime(const StateVector& state, const TargetSpec& targets) {
    return std::min(1.0, success_probability(exact_distribution(state), targets));
}

DeqaaaCircuits build_deqaaa_circuits(const AmplitudeSpec& initial, const TargetSpec& targets,
                                     const std::vector<NodePlan>& nodes,
                                     const std::optional<EqaaaPlan>& phase2, bool fence_blocks) {
    const int n = initial.n_qubits();
    Circuit b = encode_amplitudes(initial);
    const Circuit one = phase_one_circuit(n, nodes);
    if (!one.empty()) {
        if (fence_blocks) b.barrier();
        b.append(one);
    }
    DeqaaaCircuits out{b, b};
    if (phase2) {
        out.full = build_amplification_circuit(b, targets, phase2->phi, phase2->repetitions(),
                                               fence_blocks);
    }
    return out;
}

DeqaaaReport deqaaa_run(const AmplitudeSpec& initial, const TargetSpec& targets,
                        const Partition& partition, const AmplifyOptions& options) {
    const int n = initial.n_qubits();
    if (partition.n_qubits() != n || targets.n_bits() != n) {
        throw SizeError("state, targets and partition widths differ");
    }
    DeqaaaReport r;
    r.backend = options.backend;
    const StateVector psi = prepare_direct(initial);
    const Distribution P = exact_distribution(psi);
    r.p_g_initial = std::min(1.0, success_probability(P, targets));
    if (!(r.p_g_initial > 0.0)) throw DomainError("initial state has no overlap with the targets");
    r.nodes = build_node_plans(P, targets, partition);

    const bool circuit = options.backend == Backend::kCircuit;
    if (circuit) {
        Circuit b = build_deqaaa_circuits(initial, targets, r.nodes, std::nullopt,
                                          options.fence_blocks)
                        .phase1;
        r.state_after_phase1 = apply_circuit(new_zero_state(n), b);
        r.phase1_circuit = std::move(b);
    } else {
        r.state_after_phase1 = phase_one(psi, r.nodes);
    }
    r.p_g_prime = compute_pg_prime(r.state_after_phase1, targets);
    r.phase2_executed = r.p_g_prime < kExactThreshold;

    if (!r.phase2_executed) {
        r.final_state = r.state_after_phase1;
        if (circuit) r.circuit = r.phase1_circuit;
    } else {
        const EqaaaPlan plan = plan_eqaaa(r.p_g_prime);
        r.hat_J = plan.J;
        r.hat_phi = plan.phi;
        if (circuit) {
            Circuit full = build_amplification_circuit(*r.phase1_circuit, targets, plan.phi,
                                                       plan.repetitions(), options.fence_blocks);
            r.final_state = apply_circuit(new_zero_state(n), full);
            r.circuit = std::move(full);
        } else {
            StateVector s = r.state_after_phase1;
            const Complex ph = std::polar(1.0, plan.phi);
            for (int i = 0; i < plan.repetitions(); ++i) {
                s.apply_phase(targets.indices(), ph);
                s = reflect_about_state(s, r.state_after_phase1, plan.phi);
            }
            r.final_state = std::move(s);
        }
    }
    r.p_final = compute_pg_prime(r.final_state, targets);
    return r;
}

}  // namespace deqaaa
