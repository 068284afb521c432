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
#include <string>
#include <string_view>

#include "gsc/dense_matrix.hpp"
#include "gsc/gf2.hpp"

namespace gsc {

/// The Pauli group element i^delta (-1)^epsilon tau_a.
///
/// a = (v; w) has the z-part v on top and the x-part w below. Per qubit,
/// tau_{00} = I, tau_{01} = X, tau_{10} = Z, tau_{11} = ZX = iY, and
/// tau_a = tau_{v_1 w_1} (x) ... (x) tau_{v_n w_n}.
struct PhasedPauli {
    bool delta = false;
    bool epsilon = false;
    BitVector a;

    PhasedPauli() = default;
    PhasedPauli(bool delta, bool epsilon, BitVector a) : delta(delta), epsilon(epsilon), a(std::move(a)) {
    }
    /// The bare tau_a.
    explicit PhasedPauli(BitVector a) : a(std::move(a)) {
    }

    static PhasedPauli identity(size_t n) {
        return PhasedPauli(BitVector(2 * n));
    }
    /// tau_{e_j}: Z on qubit j for j < n, X on qubit j - n otherwise.
    static PhasedPauli generator(size_t n, size_t j) {
        return PhasedPauli(BitVector::unit(2 * n, j));
    }

    size_t num_qubits() const {
        return a.size() / 2;
    }
    BitVector z_part() const {
        return a.slice(0, num_qubits());
    }
    BitVector x_part() const {
        return a.slice(num_qubits(), num_qubits());
    }
    /// Phase as a power of i: delta + 2 epsilon (mod 4).
    uint8_t log_i() const {
        return static_cast<uint8_t>(delta + 2 * epsilon);
    }

    bool operator==(const PhasedPauli &other) const = default;

    /// Renders as "+tau[v|w]", "-itau[v|w]" and so on, with v and w as bit
    /// strings. parse() inverts it.
    std::string to_string() const;
    static PhasedPauli parse(std::string_view text);
};

/// (i^d1 (-1)^e1 tau_a1)(i^d2 (-1)^e2 tau_a2) in coordinates:
/// delta = d1 + d2, epsilon = e1 + e2 + d1 d2 + a2^T J a1, a = a1 + a2.
PhasedPauli pauli_mul(const PhasedPauli &p, const PhasedPauli &q);

/// True iff the two elements commute, i.e. b^T P a = 0.
bool commutes(const PhasedPauli &p, const PhasedPauli &q);

/// The exact 2^n x 2^n matrix. Entries lie in {0, +-1, +-i}.
DenseMatrix pauli_to_dense(const PhasedPauli &p);

struct BasisImage {
    uint8_t log_i;
    BitVector label;
};

/// p|x> = i^{log_i} |label>, with label = x + w and
/// log_i = delta + 2 (epsilon + v^T (x + w)).
BasisImage pauli_apply_basis(const PhasedPauli &p, const BitVector &x);

/// Index of basis label x, qubit 0 most significant.
size_t basis_index(const BitVector &x);
/// Inverse of basis_index.
BitVector basis_label(size_t index, size_t n);

/// Unit complex number i^k.
complex i_pow(int k);

}  // namespace gsc
