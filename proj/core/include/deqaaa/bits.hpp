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

#include <cstdint>
#include <string>
#include <string_view>

namespace deqaaa {

/// Basis index type. Qubit 0 is the most significant bit of the index.
using BasisIndex = std::uint64_t;

/// How decimal labels map onto basis states.
///
/// kTheory reads qubit 0 as the most significant bit, so decimal 8 on four
/// qubits is |1000>. kReversed is the little-endian readout used by several
/// simulation frameworks: decimal 8 is |0001>.
enum class BitOrder { kTheory, kReversed };

/// Largest width accepted by the bit-string helpers.
inline constexpr int kMaxBitWidth = 63;

/// Bit of qubit `q` in an `n`-qubit basis index.
constexpr BasisIndex qubit_mask(int n, int q) noexcept {
    return BasisIndex{1} << (n - 1 - q);
}

/// Reverses the low `n` bits of `x`.
BasisIndex reverse_bits(BasisIndex x, int n) noexcept;

/// Renders `index` as an `n`-character string, qubit 0 first.
std::string to_bitstring(BasisIndex index, int n);

/// Parses an `n`-character 0/1 string. Throws ParseError on bad input.
BasisIndex from_bitstring(std::string_view bits, int n);

/// Basis index addressed by a decimal label under `order`.
BasisIndex decimal_to_index(std::uint64_t decimal, int n, BitOrder order);

/// Decimal label of a basis index under `order`.
std::uint64_t index_to_decimal(BasisIndex index, int n, BitOrder order);

}  // namespace deqaaa
