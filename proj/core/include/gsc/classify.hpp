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

#include <optional>

#include "gsc/dense_engine.hpp"
#include "gsc/dense_matrix.hpp"
#include "gsc/lagrangian.hpp"

namespace gsc {

/// Largest qubit count for the Lagrangian searches.
inline constexpr size_t kMaxClassifyQubits = 3;

/// U tau_b U^dagger is Pauli for every b in source and the images span image.
struct SemiCliffordWitness {
    Lagrangian source;
    Lagrangian image;
};

struct SemiCliffordResult {
    bool value = false;
    std::optional<SemiCliffordWitness> witness;
    /// Lagrangians tried; equals the total count when value is false.
    size_t candidates_checked = 0;
};

/// Q_image^dagger U Q_source is monomial, so U maps the span of the source
/// group onto the span of the image group.
///
/// Q_L diagonalizes the group of L, so span(L) is the set of matrices diagonal
/// in the basis Q_L. U span(L) U^dagger = span(L') iff V = Q_L'^dagger U Q_L
/// maps diagonal matrices to diagonal matrices under conjugation, and that
/// holds iff V maps each basis projector to a basis projector, i.e. V is
/// monomial.
struct GeneralizedSemiCliffordWitness {
    Lagrangian source;
    Lagrangian image;
    MonomialCheck monomial;
};

struct GeneralizedSemiCliffordResult {
    bool value = false;
    std::optional<GeneralizedSemiCliffordWitness> witness;
    size_t pairs_checked = 0;
};

struct ClassificationReport {
    size_t num_qubits = 0;
    int kmax = 3;
    /// nullopt means above kmax.
    std::optional<int> hierarchy_level;
    /// Present only for n <= kMaxClassifyQubits.
    std::optional<SemiCliffordResult> semi_clifford;
    std::optional<GeneralizedSemiCliffordResult> generalized_semi_clifford;
};

/// Dense Clifford taking the z-type group onto the group of l.
DenseMatrix lagrangian_clifford(const Lagrangian &l);

/// Searches Lagrangians in canonical order; the first witness wins and is
/// re-verified before it is returned.
SemiCliffordResult is_semi_clifford(const DenseMatrix &u);

/// Searches (source, image) pairs in canonical order for a monomial
/// Q_image^dagger U Q_source.
GeneralizedSemiCliffordResult is_generalized_semi_clifford(const DenseMatrix &u);

/// Hierarchy level plus, for small n, both span tests. Throws invariant_error
/// if a semi-Clifford verdict is not also generalized semi-Clifford.
ClassificationReport classify(const DenseMatrix &u, int kmax = 3);

}  // namespace gsc
