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
#include <string>
#include <vector>

#include "deqaaa/gate.hpp"

namespace deqaaa {

/// An ordered gate list over `n_qubits` qubits.
class Circuit {
   public:
    Circuit() = default;
    explicit Circuit(int n_qubits);

    int n_qubits() const noexcept { return n_qubits_; }
    const std::vector<GateOp>& ops() const noexcept { return ops_; }
    std::size_t size() const noexcept { return ops_.size(); }
    bool empty() const noexcept { return ops_.empty(); }

    /// Validates and appends. Throws IndexError.
    Circuit& append(GateOp op);

    /// Appends all ops of `other`, which must have the same width.
    Circuit& append(const Circuit& other);

    /// Appends `other` with its qubit i relabelled to `offset + i`.
    Circuit& append_shifted(const Circuit& other, int offset);

    /// Appends a barrier over every qubit.
    Circuit& barrier();

    /// The adjoint circuit: reversed order, each gate inverted.
    Circuit inverse() const;

    bool operator==(const Circuit&) const = default;

   private:
    int n_qubits_ = 0;
    std::vector<GateOp> ops_;
};

// Line-oriented text form:
//
//   QUBITS 4
//   GATE MCPS 1.5609 controls=[0,1,2] targets=[3]
//   GATE X controls=[] targets=[1]
//
// Blank lines and lines starting with '#' are ignored. Angles are written
// with 17 significant digits so a write/read cycle is lossless.
void write_circuit(std::ostream& out, const Circuit& circuit);
std::string to_text(const Circuit& circuit);
Circuit read_circuit(std::istream& in);
Circuit circuit_from_text(const std::string& text);

}  // namespace deqaaa
