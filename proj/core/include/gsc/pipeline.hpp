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
#include <utility>
#include <vector>

#include "gsc/clifford.hpp"
#include "gsc/dense_engine.hpp"
#include "gsc/dense_matrix.hpp"

namespace gsc {

/// Q_i = U tau_{e_i} U^dagger for i = 0..2n-1, as reps and optionally dense.
struct GeneratorFamily {
    size_t n = 0;
    std::vector<CliffordRep> qs;
    std::vector<DenseMatrix> dense_qs;

    bool has_dense() const {
        return dense_qs.size() == qs.size() && !qs.empty();
    }
};

/// Throws std::invalid_argument unless every Q_i squares to the identity rep
/// and every pair has commuting C-matrices and equal reps in both orders.
/// With dense_checks, also Q_i^2 = I and Q_i Q_j = -Q_j Q_i exactly for the
/// pairs (i, i + n).
void validate_family(const GeneratorFamily &family, bool dense_checks);

/// Throws std::invalid_argument naming the generator whose conjugate is not
/// Clifford when u is outside C_3.
GeneratorFamily generators_from_gate(const DenseMatrix &u);

/// U|x> = Q_{n+1}^{x_1 + l_1} ... Q_{2n}^{x_n + l_n} |alpha> for the first
/// sign pattern l with a nonzero joint eigenspace.
DenseMatrix reconstruct_unitary(const GeneratorFamily &family);

/// The family conjugated by Q_M = (M, 0), where M puts every C_i in block
/// form; returns the new family and Q_M.
std::pair<GeneratorFamily, CliffordRep> normalize_family(const GeneratorFamily &family);

/// T(x) = f-vector of Q_1^{x_1} ... Q_{2n}^{x_{2n}} for every x, with x
/// indexed by the mask sum_k x_k 2^k.
struct TMapState {
    GeneratorFamily family;
    CliffordRep conjugator;
    std::vector<BitVector> values;
    std::vector<CliffordRep> products;
    std::vector<BitVector> kernel;
    std::vector<uint64_t> kernel_elements;
};

/// Enumerates all products in Gray-code order and checks that Ker T is a
/// subspace of dimension n, T is onto, fibres are kernel cosets, and
/// A_x = I on the kernel. Requires a block-form family.
TMapState build_t_map(GeneratorFamily family, CliffordRep conjugator);

BitVector t_map(const TMapState &state, const BitVector &x);

const std::vector<BitVector> &kernel_of_t(const TMapState &state);

struct GscCertificate {
    CliffordRep conjugator;
    DenseMatrix conjugator_dense;
    std::vector<BitVector> kernel_basis;
    std::vector<DenseMatrix> diagonal_generators;
    size_t kernel_dim = 0;
    bool a_identity_on_kernel = false;
    bool generators_diagonal = false;
    /// Rank of the 2^n diagonal patterns of the generated group.
    size_t pattern_rank = 0;

    bool complete() const {
        return kernel_dim == kernel_basis.size() && a_identity_on_kernel && generators_diagonal &&
               pattern_rank == (size_t{1} << kernel_dim);
    }
};

/// Realizes Q_x for each kernel basis vector and checks the generated group
/// is diagonal with 2^n independent patterns.
GscCertificate extract_certificate(const TMapState &state);

/// generators_from_gate, normalize_family, build_t_map, extract_certificate.
struct PipelineResult {
    GeneratorFamily family;
    TMapState state;
    GscCertificate certificate;
};
PipelineResult run_pipeline(const DenseMatrix &u);

/// Qubits A1 A2 A3 B1 B2 B3 R are 0..6. u is the product of controlled swaps
/// (R; A_i, B_i); v the CCZs on (A1,A2,A3), (A1,B2,B3), (B1,A2,B3), (B1,B2,A3).
std::pair<DenseMatrix, DenseMatrix> gottesman_mochon();

inline constexpr size_t kGottesmanMochonControl = 6;

struct CounterexampleVerdict {
    std::optional<int> uv_level;
    bool uv_in_c3 = false;
    bool vu_in_c3 = true;
    /// Conjugate of X on R by VU is not Clifford.
    bool vu_witness_on_control = false;
    std::optional<PipelineResult> uv_pipeline;

    bool passed() const {
        return uv_in_c3 && !vu_in_c3 && vu_witness_on_control && uv_pipeline && uv_pipeline->certificate.complete();
    }
};
CounterexampleVerdict verify_counterexample();

}  // namespace gsc
