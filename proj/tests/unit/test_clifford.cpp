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
#include <random>

#include "gsc/circuit_io.hpp"
#include "gsc/clifford.hpp"
#include "gsc/dense_engine.hpp"
#include "gsc/gates.hpp"
#include "gsc/random_circuits.hpp"
#include "oracles.hpp"

namespace gsc {
namespace {

DenseMatrix random_clifford(size_t n, Rng &rng) {
    return circuit_unitary(random_clifford_circuit(n, 1 + rng() % 20, rng));
}

PhasedPauli random_pauli(size_t n, Rng &rng) {
    return PhasedPauli(rng() & 1, rng() & 1, BitVector::from_mask(rng(), 2 * n));
}

// Dense conjugation u p u^dagger read back as a phased Pauli by projection.
PhasedPauli dense_conjugate(const DenseMatrix &u, const PhasedPauli &p) {
    auto m = oracle::match_pauli(u * oracle::pauli(p.delta, p.epsilon, p.a) * u.adjoint());
    EXPECT_TRUE(m.has_value());
    return PhasedPauli(m->log_i & 1, (m->log_i >> 1) & 1, m->a);
}

TEST(CliffordRep, ExtractionMatchesProjectionOracle) {
    Rng rng(21);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 40; trial++) {
            DenseMatrix u = random_clifford(n, rng);
            auto rep = extract_rep(u);
            auto data = oracle::clifford_data(u);
            ASSERT_TRUE(rep && data);
            EXPECT_EQ(rep->c(), data->c);
            EXPECT_EQ(rep->h(), data->h);
        }
    }
}

TEST(CliffordRep, ConjugationMatchesDense) {
    Rng rng(22);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 30; trial++) {
            DenseMatrix u = random_clifford(n, rng);
            CliffordRep rep = *extract_rep(u);
            for (int k = 0; k < 10; k++) {
                PhasedPauli p = random_pauli(n, rng);
                EXPECT_EQ(conjugate(rep, p), dense_conjugate(u, p)) << rep.to_string() << " " << p.to_string();
            }
        }
    }
}

TEST(CliffordRep, ConjugationIsHomomorphismExhaustivelyAtOneQubit) {
    Rng rng(23);
    for (int trial = 0; trial < 30; trial++) {
        CliffordRep rep = *extract_rep(random_clifford(1, rng));
        for (uint64_t x = 0; x < 16; x++) {
            for (uint64_t y = 0; y < 16; y++) {
                PhasedPauli p(x & 1, x & 2, BitVector::from_mask(x >> 2, 2));
                PhasedPauli q(y & 1, y & 2, BitVector::from_mask(y >> 2, 2));
                EXPECT_EQ(conjugate(rep, pauli_mul(p, q)), pauli_mul(conjugate(rep, p), conjugate(rep, q)));
            }
        }
    }
}

TEST(CliffordRep, ConjugationIsHomomorphismRandomized) {
    Rng rng(24);
    for (size_t n = 2; n <= 3; n++) {
        for (int trial = 0; trial < 200; trial++) {
            CliffordRep rep = *extract_rep(random_clifford(n, rng));
            PhasedPauli p = random_pauli(n, rng), q = random_pauli(n, rng);
            EXPECT_EQ(conjugate(rep, pauli_mul(p, q)), pauli_mul(conjugate(rep, p), conjugate(rep, q)));
        }
    }
}

TEST(CliffordRep, ComposeMatchesDenseProduct) {
    Rng rng(25);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 60; trial++) {
            DenseMatrix u1 = random_clifford(n, rng), u2 = random_clifford(n, rng);
            CliffordRep r1 = *extract_rep(u1), r2 = *extract_rep(u2);
            EXPECT_EQ(compose(r2, r1), *extract_rep(u2 * u1));
        }
    }
}

TEST(CliffordRep, InverseMatchesDenseAdjoint) {
    Rng rng(26);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 60; trial++) {
            DenseMatrix u = random_clifford(n, rng);
            CliffordRep r = *extract_rep(u);
            CliffordRep inv = inverse(r);
            EXPECT_EQ(inv, *extract_rep(u.adjoint()));
            EXPECT_TRUE(compose(inv, r).is_identity());
            EXPECT_TRUE(compose(r, inv).is_identity());
        }
    }
}

TEST(CliffordRep, ComposeIsAssociative) {
    Rng rng(27);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 3;
        CliffordRep a = *extract_rep(random_clifford(n, rng));
        CliffordRep b = *extract_rep(random_clifford(n, rng));
        CliffordRep c = *extract_rep(random_clifford(n, rng));
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
        EXPECT_EQ(compose(a, CliffordRep::identity(n)), a);
    }
}

TEST(CliffordRep, DVectorOfPhaseGate) {
    std::array<size_t, 1> q{0};
    CliffordRep s = standard_gate("S", q, 1);
    EXPECT_EQ(d_vector(s).to_string(), "01");
}

TEST(CliffordRep, HadamardSendsXToZ) {
    std::array<size_t, 1> q{0};
    CliffordRep h = standard_gate("H", q, 1);
    EXPECT_EQ(conjugate(h, PhasedPauli(BitVector::from_string("01"))), PhasedPauli(BitVector::from_string("10")));
}

TEST(CliffordRep, CnotMatrix) {
    std::array<size_t, 2> q{0, 1};
    CliffordRep cx = standard_gate("CX", q, 2);
    EXPECT_EQ(cx.c(), BitMatrix::from_rows({"1100", "0100", "0010", "0011"}));
    EXPECT_EQ(conjugate(cx, PhasedPauli(BitVector::from_string("0010"))),
              PhasedPauli(BitVector::from_string("0011")));
}

TEST(CliffordRep, FromPauliMatchesDense) {
    for (uint64_t mask = 0; mask < 16; mask++) {
        PhasedPauli p(BitVector::from_mask(mask, 4));
        CliffordRep rep = from_pauli(p);
        EXPECT_TRUE(rep.c().is_identity());
        EXPECT_EQ(rep, *extract_rep(oracle::pauli(false, false, p.a)));
    }
}

TEST(CliffordRep, RejectsBadShapes) {
    EXPECT_THROW(CliffordRep(BitMatrix::from_rows({"10", "10"}), BitVector(2)), std::invalid_argument);
    EXPECT_THROW(CliffordRep(BitMatrix::identity(2), BitVector(3)), std::invalid_argument);
    EXPECT_THROW(compose(CliffordRep::identity(1), CliffordRep::identity(2)), std::invalid_argument);
}

}  // namespace
}  // namespace gsc
