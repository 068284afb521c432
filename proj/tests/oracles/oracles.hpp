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
#pragma once

// Brute-force reference implementations. They share only the container types
// with the library and recompute everything from first principles.

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "gsc/clifford.hpp"
#include "gsc/dense_matrix.hpp"
#include "gsc/gf2.hpp"
#include "gsc/lagrangian.hpp"

namespace gsc {

// Readable gtest failure messages.
inline void PrintTo(const BitVector &v, std::ostream *os) {
    *os << v.to_string();
}
inline void PrintTo(const BitMatrix &m, std::ostream *os) {
    *os << "\n" << m.to_string();
}
inline void PrintTo(const PhasedPauli &p, std::ostream *os) {
    *os << p.to_string();
}
inline void PrintTo(const Lagrangian &l, std::ostream *os) {
    *os << "span{";
    for (const auto &b : l.basis()) {
        *os << " " << b.to_string();
    }
    *os << " }";
}
inline void PrintTo(const CliffordRep &r, std::ostream *os) {
    *os << "\n" << r.to_string();
}

}  // namespace gsc

namespace gsc::oracle {

/// i^delta (-1)^epsilon tau_a built as a Kronecker product of explicit 2x2
/// factors Z^v X^w.
DenseMatrix pauli(bool delta, bool epsilon, const BitVector &a);

/// Coefficients r_a = tr(tau_a^dagger u) / 2^n for every a in [0, 4^n),
/// indexed by BitVector::to_mask of a.
std::vector<complex> pauli_projection(const DenseMatrix &u);

/// Finds (log_i, a) with m = i^log_i tau_a by projection, if m is a phased
/// Pauli operator.
struct PauliMatch {
    int log_i;
    BitVector a;
};
std::optional<PauliMatch> match_pauli(const DenseMatrix &m);

/// C-matrix and h-vector of a Clifford unitary: column j of C and bit h_j come
/// from u tau_{e_j} u^dagger = i^{a^T J a} (-1)^{h_j} tau_a. Returns nullopt for
/// non-Clifford input.
struct RepData {
    BitMatrix c;
    BitVector h;
};
std::optional<RepData> clifford_data(const DenseMatrix &u);

/// x^T P y with P = (0 I; I 0), by direct summation.
bool symplectic_pairing(const BitVector &x, const BitVector &y);

/// Every 2n x 2n matrix over GF(2) preserving the pairing (n <= 2).
std::vector<BitMatrix> enumerate_symplectic(size_t n);

/// Every n-dimensional isotropic subspace of GF(2)^{2n} as its sorted list of
/// 2^n elements, found by enumerating spans of vector tuples (n <= 3).
std::vector<std::vector<BitVector>> lagrangian_groups(size_t n);

/// Number of entries of lagrangian_groups(n).
size_t count_lagrangians(size_t n);

/// Every x with m x = rhs, by enumeration (m.cols() <= 16).
std::vector<BitVector> all_solutions(const BitMatrix &m, const BitVector &rhs);

/// Rank as log2 of the row-span size (m.rows() <= 16).
size_t rank_by_span(const BitMatrix &m);

/// True iff u maps the span of {tau_a : a in source} onto the span of
/// {tau_b : b in image} by conjugation. Both lists hold the 2^n group
/// elements.
bool conjugation_maps_span(const DenseMatrix &u, const std::vector<BitVector> &source,
                           const std::vector<BitVector> &image);

/// Some Lagrangian group whose every element is sent by conjugation to a
/// phased Pauli operator (n <= 3).
bool semi_clifford(const DenseMatrix &u);

/// Some pair of Lagrangian groups with conjugation_maps_span (n <= 2).
bool generalized_semi_clifford(const DenseMatrix &u);

/// All 2^k elements of the span of the given vectors.
std::vector<BitVector> span_elements(const std::vector<BitVector> &basis);

}  // namespace gsc::oracle
