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

#include "deqaaa/bits.hpp"

#include "deqaaa/error.hpp"

namespace deqaaa {

namespace {

void check_width(int n) {
    if (n < 1 || n > kMaxBitWidth) {
        throw SizeError("bit width " + std::to_string(n) + " outside [1, " +
                        std::to_string(kMaxBitWidth) + "]");
    }
}

}  // namespace

BasisIndex reverse_bits(BasisIndex x, int n) noexcept {
    BasisIndex out = 0;
    for (int i = 0; i < n; ++i) {
        out = (out << 1) | ((x >> i) & 1U);
    }
    return out;
}

std::string to_bitstring(BasisIndex index, int n) {
    check_width(n);
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if (index & qubit_mask(n, q)) s[static_cast<std::size_t>(q)] = '1';
    }
    return s;
}

BasisIndex from_bitstring(std::string_view bits, int n) {
    check_width(n);
    if (bits.size() != static_cast<std::size_t>(n)) {
        throw ParseError("bit string '" + std::string(bits) + "' does not have width " +
                         std::to_string(n));
    }
    BasisIndex out = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ParseError("bit string '" + std::string(bits) + "' contains '" +
                             std::string(1, c) + "'");
        }
        out = (out << 1) | static_cast<BasisIndex>(c == '1');
    }
    return out;
}

BasisIndex decimal_to_index(std::uint64_t decimal, int n, BitOrder order) {
    check_width(n);
    if (decimal >> n) {
        throw DomainError("decimal label " + std::to_string(decimal) + " does not fit in " +
                          std::to_string(n) + " bits");
    }
    return order == BitOrder::kTheory ? decimal : reverse_bits(decimal, n);
}

std::uint64_t index_to_decimal(BasisIndex index, int n, BitOrder order) {
    check_width(n);
    return order == BitOrder::kTheory ? index : reverse_bits(index, n);
}

}  // namespace deqaaa
