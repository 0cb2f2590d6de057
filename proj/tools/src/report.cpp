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

#include "deqaaa_cli/report.hpp"

#include <numbers>

namespace deqaaa::cli {

namespace {

using nlohmann::json;

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json decimals_of(const TargetSpec& t, BitOrder order) {
    json out = json::array();
    for (auto x : t.indices()) out.push_back(index_to_decimal(x, t.n_bits(), order));
    return out;
}

json node_json(const NodePlan& p) {
    json sub = json::array();
    for (const auto& a : p.substate.amps()) sub.push_back(a.real());
    return {{"node", p.node},
            {"offset", p.offset},
            {"width", p.width},
            {"local_targets", p.local_targets.bitstrings()},
            {"p", p.plan.p},
            {"J", p.plan.J},
            {"repetitions", p.skipped ? 0 : p.plan.repetitions()},
            {"phase_angle", p.skipped ? json(nullptr) : json(p.plan.phi)},
            {"skipped", p.skipped},
            {"substate", sub}};
}

}  // namespace

json depth_json(const DepthReport& r) {
    return {{"gate_count", r.gate_count}, {"depth", r.depth}, {"per_kind", r.per_kind}};
}

RunOutcome execute(const RunConfig& cfg) {
    validate(cfg);
    const AmplitudeSpec initial = load_state(cfg);
    const int n = initial.n_qubits();
    const TargetSpec targets = resolve_targets(cfg.targets, n, cfg.bit_order);
    const AmplifyOptions options{cfg.backend, true};

    RunOutcome out;
    json& r = out.report;
    r["schema_version"] = kSchemaVersion;
    r["algorithm"] = cfg.algorithm;
    r["n"] = n;
    r["state"] = cfg.state;
    r["targets"] = targets.bitstrings();
    r["target_decimals"] = decimals_of(targets, cfg.bit_order);
    r["bit_order"] = cfg.bit_order == BitOrder::kTheory ? "theory" : "reversed";
    r["backend"] = backend_name(cfg.backend);

    StateVector final_state{1};
    if (cfg.algorithm == "deqaaa") {
        const Partition partition = [&] {
            try {
                return Partition(cfg.partition);
            } catch (const Error& e) {
                throw ConfigError(std::string("partition: ") + e.what());
            }
        }();
        if (partition.n_qubits() != n) {
            throw ConfigError("partition covers " + std::to_string(partition.n_qubits()) +
                              " qubits but the state has " + std::to_string(n));
        }
        const DeqaaaReport d = deqaaa_run(initial, targets, partition, options);
        std::optional<EqaaaPlan> p2;
        if (d.phase2_executed) p2 = EqaaaPlan{d.p_g_prime, d.hat_J, d.hat_phi};
        out.circuit = d.circuit ? *d.circuit
                                : build_deqaaa_circuits(initial, targets, d.nodes, p2).full;
        r["partition"] = cfg.partition;
        r["p_initial"] = d.p_g_initial;
        r["iterations"] = d.phase2_executed ? d.hat_J + 1 : 0;
        r["phase_angle"] = d.phase2_executed ? json(d.hat_phi) : json(nullptr);
        r["p_g_prime"] = d.p_g_prime;
        r["p_g_improvement"] = d.p_g_prime / d.p_g_initial;
        r["phase2_executed"] = d.phase2_executed;
        r["hat_J"] = d.phase2_executed ? json(d.hat_J) : json(nullptr);
        json nodes = json::array();
        for (const auto& p : d.nodes) nodes.push_back(node_json(p));
        r["nodes"] = nodes;
        out.p_final = d.p_final;
        final_state = d.final_state;
    } else {
        const bool q = cfg.algorithm == "qaaa";
        const RunReport run = q ? qaaa_run(initial, targets, options)
                                : eqaaa_run(initial, targets, options);
        const double phi = q ? std::numbers::pi : run.phase_angle.value_or(0.0);
        out.circuit = run.circuit ? *run.circuit
                                  : build_amplification_circuit(encode_amplitudes(initial),
                                                                targets, phi, run.iterations);
        r["p_initial"] = run.p_initial;
        r["iterations"] = run.iterations;
        r["phase_angle"] = optional_number(run.phase_angle);
        if (q) {
            r["predicted_success"] = predicted_success_qaaa(run.p_initial, run.iterations);
        } else {
            r["J"] = run.phase_angle ? json(run.iterations - 1) : json(nullptr);
        }
        out.p_final = run.p_final;
        final_state = run.final_state;
    }
    r["p_final"] = out.p_final;

    const DepthReport plain = analyze(out.circuit);
    r["gate_count"] = plain.gate_count;
    r["depth"] = plain.depth;
    json reports = {{"mcps_unit", depth_json(plain)}, {"decomposed", nullptr}};
    if (n <= kMaxDecomposeQubits) {
        out.decomposed = decompose_circuit(out.circuit);
        reports["decomposed"] = depth_json(analyze(*out.decomposed));
    }
    r["depth_reports"] = reports;

    r["seed"] = cfg.seed;
    r["shots"] = cfg.shots;
    r["histogram_path"] = nullptr;
    if (cfg.shots > 0) out.histogram = sample(final_state, cfg.shots, cfg.seed);

    out.numeric_ok = cfg.algorithm == "qaaa" || out.p_final >= 1.0 - 1e-8;
    return out;
}

}  // namespace deqaaa::cli
