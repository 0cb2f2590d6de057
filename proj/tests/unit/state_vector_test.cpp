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

#include "deqaaa/error.hpp"
#include "deqaaa/state_vector.hpp"
#include "support/oracle.hpp"

namespace deqaaa {
namespace {

using testing::C;

std::vector<C> amps_of(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

TEST(StateVector, StartsInAllZeros) {
    StateVector s(3);
    EXPECT_EQ(s.dim(), 8u);
    EXPECT_EQ(s[0], C(1.0));
    EXPECT_DOUBLE_EQ(s.norm(), 1.0);
    EXPECT_THROW(StateVector(0), SizeError);
    EXPECT_THROW(StateVector(kMaxStateQubits + 1), SizeError);
    EXPECT_THROW(StateVector::from_amplitudes(std::vector<C>(3)), SizeError);
}

TEST(StateVector, EveryGateMatchesKroneckerReference) {
    std::mt19937_64 g(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(g() % 5);
        Circuit c = testing::random_circuit(g, n, 1);
        const auto init = testing::random_amplitudes(g, n, true);
        StateVector s = StateVector::from_amplitudes(init);
        s.apply(c);
        const auto expect = testing::apply(testing::circuit_matrix(c), init);
        for (std::size_t i = 0; i < expect.size(); ++i) {
            ASSERT_NEAR(std::abs(s[i] - expect[i]), 0.0, 1e-12) << to_text(c);
        }
    }
}

TEST(StateVector, UnitaryOfMatchesReference) {
    std::mt19937_64 g(6);
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c = testing::random_circuit(g, 4, 12);
        EXPECT_LT(testing::plain_dist(testing::circuit_matrix(c), unitary_of(c)), 1e-12);
    }
    EXPECT_THROW(unitary_of(Circuit(kMaxUnitaryQubits + 1)), SizeError);
}

TEST(StateVector, RandomCircuitsPreserveNorm) {
    std::mt19937_64 g(8);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(g() % 8);
        StateVector s = StateVector::from_amplitudes(testing::random_amplitudes(g, n, true));
        s.apply(testing::random_circuit(g, n, 40));
        EXPECT_NEAR(s.norm(), 1.0, 1e-12);
    }
}

TEST(StateVector, McpsIsSymmetricInItsQubits) {
    const Circuit a = [] {
        Circuit c(3);
        c.append(gates::mcps({0, 1}, 2, 0.9));
        return c;
    }();
    const Circuit b = [] {
        Circuit c(3);
        c.append(gates::mcps({2, 1}, 0, 0.9));
        return c;
    }();
    EXPECT_EQ(unitary_of(a), unitary_of(b));
    Circuit z(3), p(3);
    z.append(gates::mcz({0, 1}, 2));
    p.append(gates::mcps({0, 1}, 2, std::numbers::pi));
    EXPECT_LT(max_deviation_up_to_phase(unitary_of(z), unitary_of(p)), 1e-15);
}

TEST(StateVector, ApplyPhaseAndBarriers) {
    StateVector s = StateVector::from_amplitudes({0.5, 0.5, 0.5, 0.5});
    const std::vector<BasisIndex> idx = {1, 3};
    s.apply_phase(idx, C(0, 1));
    EXPECT_EQ(s[1], C(0, 0.5));
    EXPECT_EQ(s[2], C(0.5));
    const auto before = amps_of(s);
    s.apply(gates::barrier({0, 1}));
    EXPECT_EQ(amps_of(s), before);
    const std::vector<BasisIndex> bad = {4};
    EXPECT_THROW(s.apply_phase(bad, C(1)), IndexError);
}

TEST(StateVector, WidthMismatchIsRejected) {
    EXPECT_THROW(apply_circuit(StateVector(2), Circuit(3)), SizeError);
}

TEST(StateVector, PhaseInvariantDeviation) {
    std::vector<C> a = {C(0.6), C(0, 0.8)};
    std::vector<C> b = {a[0] * std::polar(1.0, 1.1), a[1] * std::polar(1.0, 1.1)};
    EXPECT_LT(max_deviation_up_to_phase(a, b), 1e-15);
    b[1] = -b[1];
    EXPECT_GT(max_deviation_up_to_phase(a, b), 0.5);
}

}  // namespace
}  // namespace deqaaa
