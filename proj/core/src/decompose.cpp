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

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "deqaaa/error.hpp"
#include "deqaaa/metrics.hpp"

namespace deqaaa {

namespace {

std::size_t gray(std::size_t i) { return i ^ (i >> 1); }

// Control index toggled between Gray steps i and i + 1 (wrapping to 0).
int toggled_bit(std::size_t i, std::size_t steps) {
    if (i + 1 == steps) return std::countr_zero(gray(i));
    return std::countr_zero(gray(i) ^ gray(i + 1));
}

double max_abs_deviation(const DenseMatrix& a, const DenseMatrix& b) {
    double d = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
    }
    return d;
}

}  // namespace

void append_mcps_decomposition(Circuit& out, const std::vector<int>& controls, int target,
                               double phi) {
    std::vector<int> ctl = controls;
    int t = target;
    double angle = phi;
    while (!ctl.empty()) {
        const std::size_t m = ctl.size();
        const std::size_t steps = std::size_t{1} << m;
        const double unit = angle / static_cast<double>(steps);
        for (std::size_t i = 0; i < steps; ++i) {
            const double sign = (std::popcount(gray(i)) % 2 == 0) ? 1.0 : -1.0;
            out.append(gates::ps(t, sign * unit));
            out.append(gates::cnot(ctl[toggled_bit(i, steps)], t));
        }
        t = ctl.back();
        ctl.pop_back();
        angle /= 2.0;
    }
    out.append(gates::ps(t, angle));
}

void append_mcry_decomposition(Circuit& out, const std::vector<int>& controls, int target,
                               double theta) {
    if (controls.empty()) {
        out.append(gates::ry(target, theta));
        return;
    }
    const std::size_t m = controls.size();
    const std::size_t steps = std::size_t{1} << m;
    const double unit = theta / static_cast<double>(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double sign = (std::popcount(gray(i)) % 2 == 0) ? 1.0 : -1.0;
        out.append(gates::ry(target, sign * unit));
        out.append(gates::cnot(controls[toggled_bit(i, steps)], target));
    }
}

DecompositionResult decompose_mcps(int m, double phi, bool verify) {
    if (m < 0) throw DomainError("control count must be nonnegative");
    if (m + 1 > kMaxStateQubits) throw SizeError("too many controls");
    std::vector<int> controls(static_cast<std::size_t>(m));
    std::iota(controls.begin(), controls.end(), 0);
    DecompositionResult r{Circuit(m + 1), m, phi, -1.0};
    append_mcps_decomposition(r.circuit, controls, m, phi);
    if (verify && m + 1 <= kMaxUnitaryQubits) {
        Circuit direct(m + 1);
        direct.append(gates::mcps(controls, m, phi));
        r.max_deviation = max_abs_deviation(unitary_of(r.circuit), unitary_of(direct));
    }
    return r;
}

Circuit decompose_circuit(const Circuit& circuit) {
    Circuit out(circuit.n_qubits());
    for (const auto& op : circuit.ops()) {
        switch (op.kind) {
            case GateKind::kMCPS:
                append_mcps_decomposition(out, op.controls, op.targets[0], op.angle);
                break;
            case GateKind::kMCZ:
                if (op.controls.empty()) {
                    out.append(gates::z(op.targets[0]));
                } else {
                    append_mcps_decomposition(out, op.controls, op.targets[0], std::numbers::pi);
                }
                break;
            case GateKind::kMCRY:
                append_mcry_decomposition(out, op.controls, op.targets[0], op.angle);
                break;
            default:
                out.append(op);
        }
    }
    return out;
}

}  // namespace deqaaa
