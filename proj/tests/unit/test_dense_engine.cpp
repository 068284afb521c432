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

#include <array>
#include <cmath>
#include <numbers>

#include "gsc/circuit_io.hpp"
#include "gsc/dense_engine.hpp"
#include "gsc/gates.hpp"
#include "gsc/random_circuits.hpp"
#include "oracles.hpp"

namespace gsc {
namespace {

DenseMatrix on(std::string_view name, std::initializer_list<size_t> qubits, size_t n) {
    std::vector<size_t> q(qubits);
    return gate_on(name, q, n);
}

// Sign s with Q Q' = s Q' Q, read off the dense matrices.
int dense_sign(const DenseMatrix &q, const DenseMatrix &q2) {
    auto c = (q * q2).phase_relative_to(q2 * q);
    EXPECT_TRUE(c.has_value());
    if (std::abs(*c - 1.0) < 1e-9) {
        return 1;
    }
    EXPECT_LT(std::abs(*c + 1.0), 1e-9);
    return -1;
}

TEST(IsPauli, RecognizesEveryPhasedPauli) {
    for (size_t n = 1; n <= 2; n++) {
        for (uint64_t code = 0; code < (uint64_t{4} << (2 * n)); code++) {
            PhasedPauli p(code & 1, (code >> 1) & 1, BitVector::from_mask(code >> 2, 2 * n));
            auto got = is_pauli(oracle::pauli(p.delta, p.epsilon, p.a));
            ASSERT_TRUE(got);
            EXPECT_EQ(*got, p);
        }
    }
}

TEST(IsPauli, RejectsNonPaulis) {
    EXPECT_FALSE(is_pauli(gate_matrix("H")));
    EXPECT_FALSE(is_pauli(gate_matrix("S")));
    EXPECT_FALSE(is_pauli(std::polar(1.0, 0.3) * gate_matrix("X")));
    EXPECT_FALSE(is_pauli(gate_matrix("CX")));
}

TEST(ExtractRep, NonCliffordIsAValue) {
    EXPECT_FALSE(extract_rep(gate_matrix("T")));
    EXPECT_FALSE(extract_rep(gate_matrix("CCZ")));
    EXPECT_FALSE(extract_rep(gate_matrix("CS")));
    EXPECT_TRUE(extract_rep(std::polar(1.0, 0.7) * gate_matrix("H")));
}

TEST(ConjugatePauli, MatchesDenseProduct) {
    Rng rng(31);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng() % 3;
        DenseMatrix u = circuit_unitary(random_c3_circuit(n, rng));
        PhasedPauli p(rng() & 1, rng() & 1, BitVector::from_mask(rng(), 2 * n));
        DenseMatrix expect = u * oracle::pauli(p.delta, p.epsilon, p.a) * u.adjoint();
        EXPECT_TRUE(conjugate_pauli(u, p).approx_equal(expect));
    }
}

TEST(Hierarchy, StandardGates) {
    EXPECT_EQ(hierarchy_level(gate_matrix("X"), 3), 1);
    EXPECT_EQ(hierarchy_level(gate_matrix("I"), 3), 1);
    for (const char *name : {"H", "S", "CX", "CZ", "SWAP", "CSWAP"}) {
        if (std::string_view(name) == "CSWAP") {
            EXPECT_EQ(hierarchy_level(gate_matrix(name), 3), 3) << name;
        } else {
            EXPECT_EQ(hierarchy_level(gate_matrix(name), 3), 2) << name;
        }
    }
    for (const char *name : {"T", "CCZ", "CS"}) {
        EXPECT_EQ(hierarchy_level(gate_matrix(name), 3), 3) << name;
    }
}

TEST(Hierarchy, FourthLevelPhaseGate) {
    std::array<complex, 2> d{1.0, std::polar(1.0, std::numbers::pi / 8)};
    DenseMatrix r = DenseMatrix::diagonal(d);
    EXPECT_EQ(hierarchy_level(r, 3), std::nullopt);
    EXPECT_EQ(hierarchy_level(r, 4), 4);
    std::array<complex, 2> d5{1.0, std::polar(1.0, std::numbers::pi / 16)};
    EXPECT_EQ(hierarchy_level(DenseMatrix::diagonal(d5), 4), std::nullopt);
}

TEST(Hierarchy, RejectsBadArguments) {
    EXPECT_THROW(hierarchy_level(gate_matrix("H"), 0), std::invalid_argument);
    EXPECT_THROW(hierarchy_level(gate_matrix("H"), 5), std::invalid_argument);
    EXPECT_THROW(hierarchy_level(DenseMatrix::identity(4), 4), std::invalid_argument);
    EXPECT_THROW(hierarchy_level(DenseMatrix::identity(8), 3), std::invalid_argument);
}

TEST(Hierarchy, EmbeddedGatesKeepTheirLevel) {
    EXPECT_EQ(hierarchy_level(on("T", {2}, 3), 3), 3);
    EXPECT_EQ(hierarchy_level(on("CX", {2, 0}, 3), 3), 2);
    EXPECT_EQ(hierarchy_level(on("T", {0}, 2) * on("H", {0}, 2), 3), 3);
}

TEST(BlockRep, RoundTripsThroughRep) {
    Rng rng(32);
    for (int trial = 0; trial < 50; trial++) {
        BlockRep b = random_block_rep(1 + rng() % 4, rng);
        BlockRep back = BlockRep::from_rep(b.to_rep());
        EXPECT_EQ(back.a, b.a);
        EXPECT_EQ(back.e, b.e);
        EXPECT_EQ(back.f, b.f);
        EXPECT_EQ(back.g, b.g);
    }
    EXPECT_THROW(BlockRep::from_rep(CliffordRep(symplectic_form(1), BitVector(2))), std::invalid_argument);
}

TEST(BlockRep, RealizationIsAnInvolutionWithTheRightRep) {
    Rng rng(33);
    for (int trial = 0; trial < 200; trial++) {
        BlockRep b = random_block_rep(1 + rng() % 3, rng);
        DenseMatrix q = realize_block(b);
        ASSERT_TRUE(q.is_unitary());
        EXPECT_TRUE((q * q).approx_equal(DenseMatrix::identity(b.num_qubits())));
        auto rep = extract_rep(q);
        ASSERT_TRUE(rep);
        EXPECT_EQ(*rep, b.to_rep());
        EXPECT_TRUE(monomial_check(q).is_monomial);
    }
}

TEST(BlockRep, HermitianRealizationForYGate) {
    // (A, E, f, g) = (1, 1, 1, 0) is iY up to phase; the realization is Hermitian.
    BlockRep b{BitMatrix::identity(1), BitMatrix::from_rows({"1"}), BitVector::from_string("1"),
               BitVector::from_string("0")};
    DenseMatrix q = realize_block(b);
    EXPECT_TRUE(q.approx_equal(q.adjoint()));
}

TEST(CommutatorSign, MatchesDenseOnAdmissiblePairs) {
    Rng rng(34);
    int minus = 0;
    for (int trial = 0; trial < 200; trial++) {
        auto [q, q2] = random_admissible_pair(1 + rng() % 3, rng);
        int s = commutator_sign(q, q2);
        EXPECT_EQ(s, dense_sign(realize_block(q), realize_block(q2)));
        minus += s < 0;
    }
    EXPECT_GT(minus, 0);
}

TEST(CommutatorSign, ZeroShiftsCommute) {
    Rng rng(35);
    int tested = 0;
    while (tested < 100) {
        auto [q, q2] = random_admissible_pair(1 + rng() % 3, rng);
        if (!q.f.is_zero() || !q2.f.is_zero()) {
            continue;
        }
        tested++;
        EXPECT_EQ(commutator_sign(q, q2), 1);
        EXPECT_EQ(dense_sign(realize_block(q), realize_block(q2)), 1);
    }
}

TEST(CommutatorSign, RejectsNonCommutingReps) {
    BlockRep x{BitMatrix::identity(1), BitMatrix(1, 1), BitVector::from_string("1"), BitVector::from_string("0")};
    BlockRep z{BitMatrix::identity(1), BitMatrix(1, 1), BitVector::from_string("0"), BitVector::from_string("1")};
    EXPECT_EQ(commutator_sign(x, z), -1);
    BlockRep s{BitMatrix::identity(1), BitMatrix::from_rows({"1"}), BitVector(1), BitVector(1)};
    EXPECT_THROW(commutator_sign(s, x), std::invalid_argument);
}

TEST(Monomial, DetectsPermutationAndPhases) {
    auto m = monomial_check(gate_matrix("CSWAP") * gate_matrix("CCZ"));
    ASSERT_TRUE(m.is_monomial);
    EXPECT_EQ(m.permutation[5], 6u);
    EXPECT_FALSE(monomial_check(gate_matrix("H")).is_monomial);
}

}  // namespace
}  // namespace gsc
