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

#include "deqaaa/gate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "deqaaa/error.hpp"

namespace deqaaa {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    bool has_angle;
};

constexpr KindInfo kKinds[] = {
    {GateKind::kX, "X", false},        {GateKind::kZ, "Z", false},
    {GateKind::kH, "H", false},        {GateKind::kRY, "RY", true},
    {GateKind::kRZ, "RZ", true},       {GateKind::kPS, "PS", true},
    {GateKind::kCNOT, "CNOT", false},  {GateKind::kSWAP, "SWAP", false},
    {GateKind::kMCPS, "MCPS", true},   {GateKind::kMCZ, "MCZ", false},
    {GateKind::kMCRY, "MCRY", true},   {GateKind::kBarrier, "BARRIER", false},
};

std::string describe(const GateOp& op) { return std::string(gate_name(op.kind)); }

}  // namespace

std::string_view gate_name(GateKind kind) noexcept {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k.name;
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept {
    for (const auto& k : kKinds) {
        if (k.name == name) return k.kind;
    }
    return std::nullopt;
}

bool gate_has_angle(GateKind kind) noexcept {
    for (const auto& k : kKinds) {
        if (k.kind == kind) return k.has_angle;
    }
    return false;
}

std::vector<int> GateOp::qubits() const {
    std::vector<int> out = controls;
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

GateOp GateOp::inverse() const {
    GateOp out = *this;
    if (gate_has_angle(kind)) out.angle = -angle;
    return out;
}

void GateOp::validate(int n_qubits) const {
    auto fail = [&](const std::string& why) {
        throw IndexError(describe(*this) + ": " + why);
    };
    switch (kind) {
        case GateKind::kX:
        case GateKind::kZ:
        case GateKind::kH:
        case GateKind::kRY:
        case GateKind::kRZ:
        case GateKind::kPS:
            if (!controls.empty() || targets.size() != 1) fail("expects one target, no controls");
            break;
        case GateKind::kCNOT:
            if (controls.size() != 1 || targets.size() != 1) fail("expects one control, one target");
            break;
        case GateKind::kSWAP:
            if (!controls.empty() || targets.size() != 2) fail("expects two targets");
            break;
        case GateKind::kMCPS:
        case GateKind::kMCZ:
        case GateKind::kMCRY:
            if (targets.size() != 1) fail("expects one target");
            break;
        case GateKind::kBarrier:
            if (!controls.empty() || targets.empty()) fail("expects at least one qubit");
            break;
    }
    std::set<int> seen;
    for (int q : qubits()) {
        if (q < 0 || q >= n_qubits) {
            fail("qubit " + std::to_string(q) + " outside [0, " + std::to_string(n_qubits) + ")");
        }
        if (!seen.insert(q).second) fail("qubit " + std::to_string(q) + " used twice");
    }
    if (gate_has_angle(kind) && !std::isfinite(angle)) {
        throw DomainError(describe(*this) + ": non-finite angle");
    }
}

std::array<Complex, 4> base_matrix(GateKind kind, double angle) {
    using std::numbers::sqrt2;
    const Complex i{0.0, 1.0};
    switch (kind) {
        case GateKind::kX:
        case GateKind::kCNOT:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::kZ:
        case GateKind::kMCZ:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::kH:
            return {1.0 / sqrt2, 1.0 / sqrt2, 1.0 / sqrt2, -1.0 / sqrt2};
        case GateKind::kRY:
        case GateKind::kMCRY: {
            const double c = std::cos(angle / 2), s = std::sin(angle / 2);
            return {c, -s, s, c};
        }
        case GateKind::kRZ:
            return {std::exp(-i * (angle / 2)), 0.0, 0.0, std::exp(i * (angle / 2))};
        case GateKind::kPS:
        case GateKind::kMCPS:
            return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
        case GateKind::kSWAP:
        case GateKind::kBarrier:
            break;
    }
    throw DomainError(std::string(gate_name(kind)) + " has no single-qubit matrix");
}

namespace gates {

GateOp x(int q) { return {GateKind::kX, {}, {q}, 0.0}; }
GateOp z(int q) { return {GateKind::kZ, {}, {q}, 0.0}; }
GateOp h(int q) { return {GateKind::kH, {}, {q}, 0.0}; }
GateOp ry(int q, double theta) { return {GateKind::kRY, {}, {q}, theta}; }
GateOp rz(int q, double theta) { return {GateKind::kRZ, {}, {q}, theta}; }
GateOp ps(int q, double phi) { return {GateKind::kPS, {}, {q}, phi}; }
GateOp cnot(int control, int target) { return {GateKind::kCNOT, {control}, {target}, 0.0}; }
GateOp swap(int a, int b) { return {GateKind::kSWAP, {}, {a, b}, 0.0}; }
GateOp mcps(std::vector<int> controls, int target, double phi) {
    return {GateKind::kMCPS, std::move(controls), {target}, phi};
}
GateOp mcz(std::vector<int> controls, int target) {
    return {GateKind::kMCZ, std::move(controls), {target}, 0.0};
}
GateOp mcry(std::vector<int> controls, int target, double theta) {
    return {GateKind::kMCRY, std::move(controls), {target}, theta};
}
GateOp barrier(std::vector<int> qubits) {
    return {GateKind::kBarrier, {}, std::move(qubits), 0.0};
}

}  // namespace gates

}  // namespace deqaaa
