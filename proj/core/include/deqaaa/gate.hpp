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

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace deqaaa {

using Complex = std::complex<double>;

enum class GateKind {
    kX,
    kZ,
    kH,
    kRY,
    kRZ,
    kPS,
    kCNOT,
    kSWAP,
    kMCPS,
    kMCZ,
    kMCRY,
    // Scheduling fence over `targets`; not a unitary, never counted as a gate.
    kBarrier,
};

std::string_view gate_name(GateKind kind) noexcept;
std::optional<GateKind> parse_gate_kind(std::string_view name) noexcept;
bool gate_has_angle(GateKind kind) noexcept;

/// A single operation of a circuit.
///
/// Single-qubit kinds use one target and no controls. CNOT has one control
/// and one target. SWAP has two targets. The multi-controlled kinds have any
/// number of controls (possibly zero) and one target; MCPS and MCZ are
/// symmetric in all their qubits so the split is only a naming convention.
struct GateOp {
    GateKind kind = GateKind::kX;
    std::vector<int> controls;
    std::vector<int> targets;
    double angle = 0.0;

    bool operator==(const GateOp&) const = default;

    /// Every qubit touched, controls first.
    std::vector<int> qubits() const;

    /// The inverse operation (angle negated for rotations and phases).
    GateOp inverse() const;

    /// Checks arity and index constraints against a circuit width.
    /// Throws IndexError.
    void validate(int n_qubits) const;

    bool is_barrier() const noexcept { return kind == GateKind::kBarrier; }
};

/// 2x2 matrix of the single-qubit action of a gate, row-major
/// [m00, m01, m10, m11]. Defined for every kind except SWAP and barriers.
std::array<Complex, 4> base_matrix(GateKind kind, double angle);

namespace gates {
GateOp x(int q);
GateOp z(int q);
GateOp h(int q);
GateOp ry(int q, double theta);
GateOp rz(int q, double theta);
GateOp ps(int q, double phi);
GateOp cnot(int control, int target);
GateOp swap(int a, int b);
GateOp mcps(std::vector<int> controls, int target, double phi);
GateOp mcz(std::vector<int> controls, int target);
GateOp mcry(std::vector<int> controls, int target, double theta);
GateOp barrier(std::vector<int> qubits);
}  // namespace gates

}  // namespace deqaaa
