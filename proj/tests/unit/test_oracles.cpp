// Copyright 2026 The gsc Authors
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

#include <cmath>

#include "gsc/gates.hpp"
#include "oracles.hpp"

// Sanity checks on the reference implementations themselves, against values
// worked out by hand.

namespace gsc {
namespace {

TEST(Oracles, SingleQubitPaulis) {
    DenseMatrix y = oracle::pauli(false, false, BitVector::from_string("11"));
    // ZX = [[0, 1], [-1, 0]].
    EXPECT_NEAR(std::abs(y(0, 1) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(y(1, 0) + 1.0), 0.0, 1e-15);
    DenseMatrix iy = oracle::pauli(true, false, BitVector::from_string("11"));
    EXPECT_TRUE(iy.approx_equal(iy.adjoint()));
}

TEST(Oracles, ProjectionOfHadamard) {
    auto r = oracle::pauli_projection(gate_matrix("H"));
    double s = 1 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(r[0]), 0.0, 1e-12);
    // Masks: bit 0 is the z-part, bit 1 the x-part.
    EXPECT_NEAR(std::abs(r[1] - s), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r[2] - s), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(r[3]), 0.0, 1e-12);
}

TEST(Oracles, PauliMatching) {
    auto m = oracle::match_pauli(gate_matrix("Y"));
    ASSERT_TRUE(m);
    EXPECT_EQ(m->log_i, 3);
    EXPECT_EQ(m->a.to_string(), "11");
    EXPECT_FALSE(oracle::match_pauli(gate_matrix("H")));
}

TEST(Oracles, SmallSymplecticGroupOrders) {
    EXPECT_EQ(oracle::enumerate_symplectic(1).size(), 6u);
    EXPECT_EQ(oracle::enumerate_symplectic(2).size(), 720u);
}

TEST(Oracles, HadamardData) {
    auto d = oracle::clifford_data(gate_matrix("H"));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->c, BitMatrix::from_rows({"01", "10"}));
    EXPECT_TRUE(d->h.is_zero());
    EXPECT_FALSE(oracle::clifford_data(gate_matrix("T")));
}

TEST(Oracles, SpanChecks) {
    std::vector<BitVector> z = {BitVector::from_string("00"), BitVector::from_string("10")};
    std::vector<BitVector> x = {BitVector::from_string("00"), BitVector::from_string("01")};
    EXPECT_TRUE(oracle::conjugation_maps_span(gate_matrix("H"), z, x));
    EXPECT_FALSE(oracle::conjugation_maps_span(gate_matrix("H"), z, z));
    EXPECT_TRUE(oracle::conjugation_maps_span(gate_matrix("T"), z, z));
    EXPECT_TRUE(oracle::semi_clifford(gate_matrix("T")));
}

}  // namespace
}  // namespace gsc
