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

#include <gtest/gtest.h>

#include <random>

#include "deqaaa/bits.hpp"
#include "deqaaa/error.hpp"

namespace deqaaa {
namespace {

TEST(Bits, QubitZeroIsMostSignificant) {
    EXPECT_EQ(qubit_mask(4, 0), 8u);
    EXPECT_EQ(qubit_mask(4, 3), 1u);
    EXPECT_EQ(to_bitstring(8, 4), "1000");
    EXPECT_EQ(to_bitstring(14, 4), "1110");
    EXPECT_EQ(from_bitstring("0110", 4), 6u);
}

TEST(Bits, ReversedOrderMapsEightToOneBitAtTheEnd) {
    EXPECT_EQ(to_bitstring(decimal_to_index(8, 4, BitOrder::kTheory), 4), "1000");
    EXPECT_EQ(to_bitstring(decimal_to_index(8, 4, BitOrder::kReversed), 4), "0001");
    EXPECT_EQ(index_to_decimal(1, 4, BitOrder::kReversed), 8u);
}

TEST(Bits, RoundTripsRandomValues) {
    std::mt19937_64 g(7);
    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(g() % 40);
        const BasisIndex x = g() & ((BasisIndex{1} << n) - 1);
        EXPECT_EQ(from_bitstring(to_bitstring(x, n), n), x);
        EXPECT_EQ(reverse_bits(reverse_bits(x, n), n), x);
        for (auto order : {BitOrder::kTheory, BitOrder::kReversed}) {
            EXPECT_EQ(decimal_to_index(index_to_decimal(x, n, order), n, order), x);
        }
    }
}

TEST(Bits, RejectsBadInput) {
    EXPECT_THROW(from_bitstring("10a0", 4), ParseError);
    EXPECT_THROW(from_bitstring("100", 4), ParseError);
    EXPECT_THROW(decimal_to_index(16, 4, BitOrder::kTheory), DomainError);
    EXPECT_THROW(to_bitstring(0, 0), SizeError);
    EXPECT_THROW(to_bitstring(0, 64), SizeError);
}

}  // namespace
}  // namespace deqaaa
