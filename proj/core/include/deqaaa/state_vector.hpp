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

#include <span>
#include <vector>

#include "deqaaa/bits.hpp"
#include "deqaaa/circuit.hpp"
#include "deqaaa/gate.hpp"

namespace deqaaa {

/// Largest register a StateVector may hold.
inline constexpr int kMaxStateQubits = 24;
/// Largest register for which unitary_of builds a dense matrix.
inline constexpr int kMaxUnitaryQubits = 10;

/// Dense state vector of `n` qubits: 2^n double-precision amplitudes with
/// qubit 0 as the most significant bit of the basis index.
class StateVector {
   public:
    /// |0...0> on `n` qubits. Throws SizeError unless 1 <= n <= kMaxStateQubits.
    explicit StateVector(int n);

    /// Takes ownership of `amplitudes`; the length must be a power of two.
    /// No normalization is performed.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int n_qubits() const noexcept { return n_; }
    std::size_t dim() const noexcept { return amps_.size(); }

    std::span<const Complex> amplitudes() const noexcept { return amps_; }
    std::span<Complex> amplitudes() noexcept { return amps_; }
    Complex operator[](BasisIndex i) const { return amps_[i]; }
    Complex& operator[](BasisIndex i) { return amps_[i]; }

    double norm() const noexcept;

    /// Applies one gate in place. Barriers are no-ops.
    void apply(const GateOp& op);

    /// Applies every op of `circuit` in order.
    void apply(const Circuit& circuit);

    /// Multiplies the amplitude of each listed basis state by `phase`.
    void apply_phase(std::span<const BasisIndex> indices, Complex phase);

   private:
    StateVector(int n, std::vector<Complex> amps);

    int n_;
    std::vector<Complex> amps_;
};

/// |0...0> on `n` qubits.
StateVector new_zero_state(int n);

/// The circuit applied to a copy of `state`. Throws SizeError when widths
/// differ and IndexError for out-of-range qubits.
StateVector apply_circuit(StateVector state, const Circuit& circuit);

/// Dense row-major 2^n x 2^n unitary of a circuit.
class DenseMatrix {
   public:
    explicit DenseMatrix(std::size_t dim);
    std::size_t dim() const noexcept { return dim_; }
    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    bool operator==(const DenseMatrix&) const = default;

   private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Throws SizeError when the circuit has more than kMaxUnitaryQubits qubits.
DenseMatrix unitary_of(const Circuit& circuit);

/// max |a_ij - c * b_ij| with c the unit-modulus phase of tr(b^dagger a).
double max_deviation_up_to_phase(const DenseMatrix& a, const DenseMatrix& b);

/// max_i |a_i - c * b_i| with c the phase aligning the inner product.
double max_deviation_up_to_phase(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace deqaaa
