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

#include "deqaaa/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "deqaaa/error.hpp"

namespace deqaaa {

namespace {

void check_probability(double p) {
    if (!(p > 0.0 && p <= 1.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "success probability " << p << " outside (0, 1]";
        throw DomainError(msg.str());
    }
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> out;
    for (int q = lo; q < hi; ++q) out.push_back(q);
    return out;
}

void phase_block(Circuit& c, BasisIndex pattern, int n, double phi) {
    for (int q = 0; q < n; ++q) {
        if ((pattern & qubit_mask(n, q)) == 0) c.append(gates::x(q));
    }
    if (phi == std::numbers::pi) {
        c.append(gates::mcz(range(0, n - 1), n - 1));
    } else {
        c.append(gates::mcps(range(0, n - 1), n - 1, phi));
    }
    for (int q = 0; q < n; ++q) {
        if ((pattern & qubit_mask(n, q)) == 0) c.append(gates::x(q));
    }
}

// Measured success can drift past 1 by rounding.
double clamp_probability(double p) { return std::min(p, 1.0); }

// floor() that treats values within rounding of an integer as that integer,
// so p = 1/4 gives pi / (4 asin(1/2)) = 1.5 exactly.
double snapped_floor(double v) { return std::floor(v + 1e-12); }

}  // namespace

int iterations_qaaa(double p_g) {
    check_probability(p_g);
    return static_cast<int>(snapped_floor(std::numbers::pi / (4.0 * std::asin(std::sqrt(p_g)))));
}

int iterations_eqaaa(double p) {
    check_probability(p);
    const double j = snapped_floor(std::numbers::pi / (4.0 * std::asin(std::sqrt(p))) - 0.5);
    return std::max(0, static_cast<int>(j));
}

double phase_angle(double p, int J) {
    check_probability(p);
    if (J < 0) throw DomainError("J must be nonnegative");
    double arg = std::sin(std::numbers::pi / (4.0 * J + 6.0)) / std::sqrt(p);
    if (arg > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "no phase angle for p = " << p << ", J = " << J;
        throw DomainError(msg.str());
    }
    arg = std::min(arg, 1.0);
    return 2.0 * std::asin(arg);
}

QaaaPlan plan_qaaa(double p_g) { return {p_g, iterations_qaaa(p_g)}; }

EqaaaPlan plan_eqaaa(double p) {
    const int J = iterations_eqaaa(p);
    return {p, J, phase_angle(p, J)};
}

double predicted_success_qaaa(double p_g, int r) {
    check_probability(p_g);
    if (r < 0) throw DomainError("r must be nonnegative");
    const double s = std::sin((2.0 * r + 1.0) * std::asin(std::sqrt(p_g)));
    return s * s;
}

RotationGeometry rotation_geometry(double p_g, double phi) {
    check_probability(p_g);
    if (!(phi >= 0.0 && phi <= std::numbers::pi)) throw DomainError("phi outside [0, pi]");
    const double theta = std::asin(std::sqrt(p_g));
    const double sb = std::sin(phi / 2.0) * std::sin(theta);
    if (sb >= 1.0) throw DomainError("rotation axis undefined at p_g = 1, phi = pi");
    RotationGeometry g;
    g.beta = std::asin(sb);
    g.alpha = 4.0 * g.beta;
    const double k = std::cos(theta) / std::cos(g.beta);
    g.n_x = k * std::cos(phi / 2.0);
    g.n_y = k * std::sin(phi / 2.0);
    // cos(theta) tan(theta) = sin(theta), which stays finite at p_g = 1
    g.n_z = std::sin(theta) / std::cos(g.beta) * std::cos(phi / 2.0);
    g.omega = 2.0 * (std::numbers::pi / 2.0 - std::asin(sb));
    return g;
}

Circuit build_phase_oracle(const TargetSpec& targets, double phi, bool fence_blocks) {
    const int n = targets.n_bits();
    Circuit c(n);
    bool first = true;
    for (BasisIndex x : targets.indices()) {
        if (!first && fence_blocks) c.barrier();
        first = false;
        phase_block(c, x, n, phi);
    }
    return c;
}

Circuit build_zero_reflection(int n, double phi) {
    Circuit c(n);
    phase_block(c, 0, n, phi);
    return c;
}

StateVector reflect_about_state(const StateVector& state, const StateVector& psi, double phi) {
    if (state.dim() != psi.dim()) throw SizeError("state and reflection axis differ in size");
    const auto a = state.amplitudes();
    const auto v = psi.amplitudes();
    Complex overlap{};
    for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(v[i]) * a[i];
    const Complex k = (std::polar(1.0, phi) - 1.0) * overlap;
    StateVector out = state;
    auto o = out.amplitudes();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] += k * v[i];
    return out;
}

Circuit build_amplification_circuit(const Circuit& prep, const TargetSpec& targets, double phi,
                                    int repetitions, bool fence_blocks) {
    const int n = prep.n_qubits();
    if (targets.n_bits() != n) throw SizeError("target width differs from preparation width");
    const Circuit oracle = build_phase_oracle(targets, phi, fence_blocks);
    const Circuit prep_dg = prep.inverse();
    const Circuit zero = build_zero_reflection(n, phi);
    Circuit c = prep;
    auto fence = [&] {
        if (fence_blocks) c.barrier();
    };
    for (int i = 0; i < repetitions; ++i) {
        fence();
        c.append(oracle);
        fence();
        c.append(prep_dg);
        fence();
        c.append(zero);
        fence();
        c.append(prep);
    }
    return c;
}

namespace {

struct Start {
    StateVector psi;
    double p;
};

Start start_of(const AmplitudeSpec& initial, const TargetSpec& targets) {
    if (targets.n_bits() != initial.n_qubits()) {
        throw SizeError("targets have width " + std::to_string(targets.n_bits()) + ", state has " +
                        std::to_string(initial.n_qubits()) + " qubits");
    }
    StateVector psi = prepare_direct(initial);
    const double p = success_probability(exact_distribution(psi), targets);
    if (!(p > 0.0)) throw DomainError("initial state has no overlap with the targets");
    return {std::move(psi), clamp_probability(p)};
}

RunReport finish(RunReport r, const TargetSpec& targets) {
    r.p_final = clamp_probability(success_probability(exact_distribution(r.final_state), targets));
    return r;
}

RunReport run_common(std::string algorithm, const AmplitudeSpec& initial,
                     const TargetSpec& targets, int reps, double phi, std::optional<double> angle,
                     const AmplifyOptions& options, const Start& start) {
    RunReport r;
    r.algorithm = std::move(algorithm);
    r.n_qubits = initial.n_qubits();
    r.targets = targets.indices();
    r.p_initial = start.p;
    r.iterations = reps;
    r.phase_angle = angle;
    r.backend = options.backend;
    if (options.backend == Backend::kCircuit) {
        Circuit c = build_amplification_circuit(encode_amplitudes(initial), targets, phi, reps,
                                                options.fence_blocks);
        r.final_state = apply_circuit(new_zero_state(r.n_qubits), c);
        r.circuit = std::move(c);
    } else {
        StateVector s = start.psi;
        const Complex ph = std::polar(1.0, phi);
        for (int i = 0; i < reps; ++i) {
            s.apply_phase(targets.indices(), ph);
            s = reflect_about_state(s, start.psi, phi);
        }
        r.final_state = std::move(s);
    }
    return finish(std::move(r), targets);
}

}  // namespace

RunReport qaaa_run(const AmplitudeSpec& initial, const TargetSpec& targets,
                   const AmplifyOptions& options) {
    const Start start = start_of(initial, targets);
    const int r = iterations_qaaa(start.p);
    return run_common("qaaa", initial, targets, r, std::numbers::pi, std::nullopt, options, start);
}

RunReport eqaaa_run(const AmplitudeSpec& initial, const TargetSpec& targets,
                    const AmplifyOptions& options) {
    const Start start = start_of(initial, targets);
    if (start.p >= kExactThreshold) {
        return run_common("eqaaa", initial, targets, 0, 0.0, std::nullopt, options, start);
    }
    const EqaaaPlan plan = plan_eqaaa(start.p);
    return run_common("eqaaa", initial, targets, plan.repetitions(), plan.phi, plan.phi, options,
                      start);
}

}  // namespace deqaaa
