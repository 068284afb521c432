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

#include <cstdint>
#include <optional>
#include <vector>

#include "gsc/clifford.hpp"
#include "gsc/dense_matrix.hpp"
#include "gsc/pauli.hpp"

namespace gsc {

/// Largest qubit count accepted by hierarchy_level and the pipeline.
inline constexpr size_t kMaxHierarchyQubits = 7;

/// Throws std::invalid_argument unless u^dagger u = I within kTolerance.
void require_unitary(const DenseMatrix &u);

/// u p u^dagger, exploiting that p is monomial.
DenseMatrix conjugate_pauli(const DenseMatrix &u, const PhasedPauli &p);

/// The PhasedPauli whose dense matrix equals u entrywise, if any.
std::optional<PhasedPauli> is_pauli(const DenseMatrix &u);

/// (C, h) of u if u is Clifford, nullopt otherwise.
std::optional<CliffordRep> extract_rep(const DenseMatrix &u);

/// Smallest k <= kmax with u in C_k, or nullopt if u lies above kmax.
///
/// C_1 and C_2 are decided directly. C_3 needs the 2n generator conjugates to
/// be Clifford, which suffices because C_2 is a group. C_4 asks every Pauli
/// conjugate to lie in C_3 since C_3 is not closed under products; it is
/// limited to n <= 3.
std::optional<int> hierarchy_level(const DenseMatrix &u, int kmax);

/// Block-form involutive Clifford: C = (A E; 0 A^T), h = (f; g).
struct BlockRep {
    BitMatrix a;
    BitMatrix e;
    BitVector f;
    BitVector g;

    size_t num_qubits() const {
        return a.rows();
    }
    /// diag(A E).
    BitVector d0() const;
    CliffordRep to_rep() const;
    /// Throws std::invalid_argument if the lower-left block of C is nonzero.
    static BlockRep from_rep(const CliffordRep &rep);
    /// Throws std::invalid_argument unless A^2 = I, E and AE are symmetric,
    /// A^T f = f, and the rep squares to the identity rep.
    void validate() const;

    /// Exponent k(y) with lambda_0 lambda_{f+y} = i^{k(y)}. With d = diag(AE)
    /// and L = lows(AE + d d^T):
    ///   k(y) = d.y + 2 (d.y + g.y + y^T L y)  (mod 4).
    uint8_t lambda_product_log_i(const BitVector &y) const;
};

/// The monomial matrix with Q|x> = lambda_x |f + A^T x>.
///
/// The sign freedom is fixed by taking lambda_0 as the principal square root
/// of lambda_0^2 = i^{k(f)}; this gives Q^2 = +I and lambda_0 = 1 when f = 0.
DenseMatrix realize_block(const BlockRep &rep);

/// +1 if the realized operators commute, -1 if they anticommute, computed
/// from the lambda relation alone. With s = f + f', k for q and k' for q2:
///   sign = i^{k(f) + k'(s) - k'(f') - k(s)},
/// which is +-1 for every admissible pair. Throws if the pair is not
/// admissible (C-matrices or h-vectors incompatible).
int commutator_sign(const BlockRep &q, const BlockRep &q2);

/// u = Pi Lambda: u(permutation[c], c) = phases[c].
struct MonomialCheck {
    bool is_monomial = false;
    std::vector<size_t> permutation;
    std::vector<complex> phases;
};

MonomialCheck monomial_check(const DenseMatrix &u, double tol = kTolerance);

}  // namespace gsc
