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

#include "deqaaa/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "deqaaa/error.hpp"

namespace deqaaa {

namespace {

void check_qubits(int n, int limit) {
    if (n < 1 || n > limit) {
        throw SizeError("qubit count " + std::to_string(n) + " outside [1, " +
                        std::to_string(limit) + "]");
    }
}

BasisIndex mask_of(int n, const std::vector<int>& qubits) {
    BasisIndex m = 0;
    for (int q : qubits) m |= qubit_mask(n, q);
    return m;
}

bool is_diagonal(GateKind kind) {
    switch (kind) {
        case GateKind::kZ:
        case GateKind::kRZ:
        case GateKind::kPS:
        case GateKind::kMCZ:
        case GateKind::kMCPS:
            return true;
        default:
            return false;
    }
}

Complex phase_of(Complex z) {
    const double a = std::abs(z);
    return a > 0.0 ? z / a : Complex{1.0, 0.0};
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
    check_qubits(n, kMaxStateQubits);
    amps_.assign(std::size_t{1} << n, Complex{});
    amps_[0] = 1.0;
}

StateVector::StateVector(int n, std::vector<Complex> amps) : n_(n), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw SizeError("amplitude count " + std::to_string(dim) + " is not a power of two >= 2");
    }
    const int n = std::countr_zero(dim);
    check_qubits(n, kMaxStateQubits);
    return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const noexcept {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::apply(const GateOp& op) {
    if (op.is_barrier()) return;
    op.validate(n_);
    const BasisIndex dim = amps_.size();

    if (op.kind == GateKind::kSWAP) {
        const BasisIndex ma = qubit_mask(n_, op.targets[0]);
        const BasisIndex mb = qubit_mask(n_, op.targets[1]);
        for (BasisIndex i = 0; i < dim; ++i) {
            if ((i & ma) && !(i & mb)) std::swap(amps_[i], amps_[i ^ ma ^ mb]);
        }
        return;
    }

    const BasisIndex cmask = mask_of(n_, op.controls);
    const BasisIndex tmask = qubit_mask(n_, op.targets[0]);
    const auto m = base_matrix(op.kind, op.angle);

    if (is_diagonal(op.kind)) {
        for (BasisIndex i = 0; i < dim; ++i) {
            if ((i & cmask) != cmask) continue;
            amps_[i] *= (i & tmask) ? m[3] : m[0];
        }
        return;
    }

    for (BasisIndex i = 0; i < dim; ++i) {
        if ((i & tmask) || (i & cmask) != cmask) continue;
        const BasisIndex j = i | tmask;
        const Complex a0 = amps_[i], a1 = amps_[j];
        amps_[i] = m[0] * a0 + m[1] * a1;
        amps_[j] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply(const Circuit& circuit) {
    if (circuit.n_qubits() != n_) {
        throw SizeError("circuit has " + std::to_string(circuit.n_qubits()) +
                        " qubits, state has " + std::to_string(n_));
    }
    for (const auto& op : circuit.ops()) apply(op);
}

void StateVector::apply_phase(std::span<const BasisIndex> indices, Complex phase) {
    for (BasisIndex x : indices) {
        if (x >= amps_.size()) throw IndexError("basis index out of range");
        amps_[x] *= phase;
    }
}

StateVector new_zero_state(int n) { return StateVector(n); }

StateVector apply_circuit(StateVector state, const Circuit& circuit) {
    state.apply(circuit);
    return state;
}

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

DenseMatrix unitary_of(const Circuit& circuit) {
    const int n = circuit.n_qubits();
    check_qubits(n, kMaxUnitaryQubits);
    const std::size_t dim = std::size_t{1} << n;
    DenseMatrix u(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> basis(dim);
        basis[col] = 1.0;
        auto state = StateVector::from_amplitudes(std::move(basis));
        state.apply(circuit);
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = state[row];
    }
    return u;
}

double max_deviation_up_to_phase(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim()) throw SizeError("matrix dimensions differ");
    Complex overlap{};
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) overlap += std::conj(b(r, c)) * a(r, c);
    }
    const Complex phase = phase_of(overlap);
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            worst = std::max(worst, std::abs(a(r, c) - phase * b(r, c)));
        }
    }
    return worst;
}

double max_deviation_up_to_phase(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) throw SizeError("vector lengths differ");
    Complex overlap{};
    for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(b[i]) * a[i];
    const Complex phase = phase_of(overlap);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - phase * b[i]));
    }
    return worst;
}

}  // namespace deqaaa
