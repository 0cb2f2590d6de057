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

#include <iosfwd>
#include <vector>

#include "deqaaa/circuit.hpp"
#include "deqaaa/state_vector.hpp"

namespace deqaaa {

/// Target amplitudes for state preparation.
class AmplitudeSpec {
   public:
    /// Requires a power-of-two length and unit L2 norm within 1e-9 unless
    /// `normalize` is set, in which case the vector is rescaled. Throws
    /// DomainError for a zero or non-finite vector, SizeError for a bad length.
    explicit AmplitudeSpec(std::vector<Complex> amps, bool normalize = false);

    static AmplitudeSpec from_real(const std::vector<double>& amps, bool normalize = false);

    int n_qubits() const noexcept { return n_; }
    const std::vector<Complex>& amps() const noexcept { return amps_; }

    /// True when every amplitude is real and nonnegative.
    bool real_nonnegative() const noexcept;

   private:
    int n_;
    std::vector<Complex> amps_;
};

/// Reads CSV rows `bitstring,real,imag`; an optional header row is skipped.
/// Missing basis states are zero.
AmplitudeSpec read_amplitudes_csv(std::istream& in, bool normalize = false);

/// Rotation-tree preparation circuit: applied to |0...0> it yields exactly
/// spec.amps() (to rounding).
///
/// Level k sets the conditional split of qubit k given each prefix of qubits
/// 0..k-1 with an RY on qubit k controlled on that prefix (X gates map a
/// prefix to all-ones). A level whose prefixes all share one angle collapses
/// to a single uncontrolled RY. Zero-mass prefixes are skipped. Complex
/// inputs get a trailing diagonal layer: one MCPS(arg a_x) per basis state
/// with nonzero phase. Real nonnegative inputs produce no phase gates.
Circuit encode_amplitudes(const AmplitudeSpec& spec);

/// Copies the amplitudes into a state without building a circuit.
StateVector prepare_direct(const AmplitudeSpec& spec);

}  // namespace deqaaa
