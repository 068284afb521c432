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
#include <map>
#include <vector>

#include "gsc/clifford.hpp"
#include "gsc/dense_matrix.hpp"

namespace gsc {

/// Q = sum_a r_a i^{a^T J a} tau_a with r_a = magnitude * i^{phases[a]} and
/// a^T J a read as a bit.
///
/// The support is the coset a0 + span(image_basis) of Im(I + C); every
/// coefficient has modulus 2^{-(2n - s)/2} where s = dim Ker(I + C), and the
/// anchor a0 has phase 0.
struct ExpansionResult {
    BitVector a0;
    std::vector<BitVector> image_basis;
    std::map<BitVector, uint8_t> phases;
    double magnitude = 0;
    size_t s = 0;

    size_t support_size() const {
        return phases.size();
    }
    /// r_a, zero off the support.
    complex coefficient(const BitVector &a) const;
};

/// The lexicographically least alpha with alpha^T b = b^T lows(C^T J C + d d^T) b
/// on Ker(I + C). Throws invariant_error if that quadratic form is not linear
/// on the kernel or d^T b != 0 for some kernel vector b.
BitVector alpha_vector(const CliffordRep &rep);

/// Pauli expansion by breadth-first propagation from a0 = P(h + alpha);
/// every redundant edge is checked. Throws invariant_error on inconsistency.
ExpansionResult expand(const CliffordRep &rep);

/// Dense matrix of the expansion (n <= 7).
DenseMatrix rep_to_dense(const CliffordRep &rep);

}  // namespace gsc
