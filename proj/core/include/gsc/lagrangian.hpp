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

#include <vector>

#include "gsc/gf2.hpp"

namespace gsc {

/// A maximal isotropic subspace of Z_2^{2n}: the vector-space shadow of a
/// maximal abelian subgroup of the n-qubit Pauli group.
///
/// The stored basis is the reduced row echelon form of whatever spanning set
/// was supplied, so two Lagrangians compare equal iff they are the same
/// subspace.
class Lagrangian {
   public:
    /// Throws std::invalid_argument unless the vectors span an n-dimensional
    /// isotropic subspace of Z_2^{2n}.
    explicit Lagrangian(const std::vector<BitVector> &spanning);

    /// span(e_1..e_n): the z-type Paulis.
    static Lagrangian z_type(size_t n);
    /// span(e_{n+1}..e_{2n}): the x-type Paulis.
    static Lagrangian x_type(size_t n);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<BitVector> &basis() const {
        return basis_;
    }
    bool contains(const BitVector &v) const;

    bool operator==(const Lagrangian &other) const = default;
    bool operator<(const Lagrangian &other) const {
        return basis_ < other.basis_;
    }

   private:
    size_t n_ = 0;
    std::vector<BitVector> basis_;
};

/// A symplectic matrix whose first n columns are the canonical basis of `l`,
/// so it maps the z-type Lagrangian onto `l`.
BitMatrix symplectic_complete(const Lagrangian &l);

/// Every Lagrangian of Z_2^{2n}, each exactly once, sorted by canonical basis.
/// Throws std::invalid_argument for n > 3.
std::vector<Lagrangian> enumerate_lagrangians(size_t n);

}  // namespace gsc
