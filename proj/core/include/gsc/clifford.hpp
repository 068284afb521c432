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

#include <string>

#include "gsc/gf2.hpp"
#include "gsc/pauli.hpp"

namespace gsc {

/// A Clifford operator Q up to global phase, stored as (C, h) with
/// Q tau_{e_j} Q^dagger = i^{d_j} (-1)^{h_j} tau_{c_j}, c_j the j-th column of
/// C and d = diag(C^T J C).
class CliffordRep {
   public:
    CliffordRep() = default;
    /// Throws std::invalid_argument unless c is symplectic and h has length 2n.
    CliffordRep(BitMatrix c, BitVector h);

    static CliffordRep identity(size_t n);

    size_t num_qubits() const {
        return c_.rows() / 2;
    }
    const BitMatrix &c() const {
        return c_;
    }
    const BitVector &h() const {
        return h_;
    }
    /// Top half of h.
    BitVector f() const {
        return h_.slice(0, num_qubits());
    }
    /// Bottom half of h.
    BitVector g() const {
        return h_.slice(num_qubits(), num_qubits());
    }
    bool is_identity() const {
        return c_.is_identity() && h_.is_zero();
    }

    bool operator==(const CliffordRep &other) const = default;

    std::string to_string() const;

   private:
    BitMatrix c_;
    BitVector h_;
};

/// diag(C^T J C).
BitVector d_vector(const CliffordRep &rep);

/// lows(C^T J C + d d^T), the quadratic part of the sign update.
BitMatrix sign_form(const CliffordRep &rep);

/// Q p Q^dagger.
PhasedPauli conjugate(const CliffordRep &rep, const PhasedPauli &p);

/// The product outer * inner (inner acts first).
CliffordRep compose(const CliffordRep &outer, const CliffordRep &inner);

CliffordRep inverse(const CliffordRep &rep);

/// The rep (I, P a) of tau_a; the phase of p is dropped.
CliffordRep from_pauli(const PhasedPauli &p);

}  // namespace gsc
