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

#include <numbers>
#include <random>

#include "deqaaa/circuit.hpp"
#include "deqaaa/error.hpp"
#include "support/oracle.hpp"

namespace deqaaa {
namespace {

TEST(Gate, ValidatesArity) {
    EXPECT_NO_THROW(gates::x(0).validate(1));
    EXPECT_THROW(gates::x(1).validate(1), IndexError);
    EXPECT_THROW(gates::cnot(0, 0).validate(2), IndexError);
    EXPECT_THROW(gates::mcps({0, 1}, 1, 0.3).validate(3), IndexError);
    EXPECT_THROW(gates::barrier({}).validate(2), IndexError);
    GateOp bad = gates::ry(0, std::numeric_limits<double>::quiet_NaN());
    EXPECT_THROW(bad.validate(1), DomainError);
}

TEST(Gate, InverseNegatesAngles) {
    EXPECT_DOUBLE_EQ(gates::ry(0, 0.7).inverse().angle, -0.7);
    EXPECT_DOUBLE_EQ(gates::mcps({0}, 1, 0.7).inverse().angle, -0.7);
    EXPECT_EQ(gates::cnot(0, 1).inverse(), gates::cnot(0, 1));
}

TEST(Circuit, AppendRejectsOutOfRangeQubits) {
    Circuit c(2);
    EXPECT_THROW(c.append(gates::x(2)), IndexError);
    EXPECT_TRUE(c.empty());
}

TEST(Circuit, InverseComposesToIdentity) {
    std::mt19937_64 g(11);
    for (int i = 0; i < 20; ++i) {
        Circuit c = testing::random_circuit(g, 3, 15);
        Circuit both = c;
        both.append(c.inverse());
        const auto m = testing::circuit_matrix(both);
        EXPECT_LT(testing::phase_dist(m, testing::Mat::identity(8)), 1e-12);
    }
}

TEST(Circuit, TextRoundTripIsExact) {
    std::mt19937_64 g(3);
    for (int i = 0; i < 50; ++i) {
        Circuit c = testing::random_circuit(g, 5, 30);
        c.barrier();
        EXPECT_EQ(circuit_from_text(to_text(c)), c);
    }
}

TEST(Circuit, TextFormat) {
    Circuit c(3);
    c.append(gates::x(0)).append(gates::mcps({0, 1}, 2, 0.5));
    EXPECT_EQ(to_text(c),
              "QUBITS 3\n"
              "GATE X controls=[] targets=[0]\n"
              "GATE MCPS 0.5 controls=[0,1] targets=[2]\n");
}

TEST(Circuit, ParserSkipsCommentsAndReportsErrors) {
    const Circuit c = circuit_from_text("# header\nQUBITS 2\n  # gate\nGATE H controls=[] targets=[1]\n");
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.ops()[0], gates::h(1));
    EXPECT_THROW(circuit_from_text("GATE H controls=[] targets=[0]\n"), ParseError);
    EXPECT_THROW(circuit_from_text("QUBITS 2\nGATE FOO controls=[] targets=[0]\n"), ParseError);
    EXPECT_THROW(circuit_from_text("QUBITS 2\nGATE RY abc controls=[] targets=[0]\n"), ParseError);
    EXPECT_THROW(circuit_from_text("QUBITS 2\nGATE X controls=[] targets=[0] junk\n"), ParseError);
    EXPECT_THROW(circuit_from_text("QUBITS 2\nGATE X controls=[] targets=[5]\n"), IndexError);
    EXPECT_THROW(circuit_from_text(""), ParseError);
}

}  // namespace
}  // namespace deqaaa
