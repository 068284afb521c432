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
#include "gsc/classify.hpp"

#include <stdexcept>
#include <string>

#include "gsc/clifford.hpp"
#include "gsc/expansion.hpp"
#include "gsc/pauli.hpp"

namespace gsc {

namespace {

void require_small(const DenseMatrix &u) {
    if (u.num_qubits() == 0 || u.num_qubits() > kMaxClassifyQubits) {
        throw std::invalid_argument("Lagrangian search supports 1 to " + std::to_string(kMaxClassifyQubits) +
                                    " qubits");
    }
}

/// Images of the basis of l under u, if all are Pauli.
std::optional<std::vector<BitVector>> pauli_images(const DenseMatrix &u, const Lagrangian &l) {
    std::vector<BitVector> images;
    for (const auto &b : l.basis()) {
        auto p = is_pauli(conjugate_pauli(u, PhasedPauli(b)));
        if (!p) {
            return std::nullopt;
        }
        images.push_back(p->a);
    }
    return images;
}

bool maps_span(const DenseMatrix &u, const DenseMatrix &q_source, const DenseMatrix &q_image_adj) {
    size_t n = u.num_qubits();
    DenseMatrix w = q_image_adj * u * q_source;
    for (size_t j = 0; j < n; j++) {
        if (!conjugate_pauli(w, PhasedPauli::generator(n, j)).is_diagonal()) {
            return false;
        }
    }
    return true;
}

}  // namespace

DenseMatrix lagrangian_clifford(const Lagrangian &l) {
    return rep_to_dense(CliffordRep(symplectic_complete(l), BitVector(2 * l.num_qubits())));
}

SemiCliffordResult is_semi_clifford(const DenseMatrix &u) {
    require_small(u);
    SemiCliffordResult out;
    for (const auto &l : enumerate_lagrangians(u.num_qubits())) {
        out.candidates_checked++;
        auto images = pauli_images(u, l);
        if (!images) {
            continue;
        }
        Lagrangian image(*images);
        // Re-verify: every element of the source group, not only the basis.
        size_t n = u.num_qubits();
        for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
            BitVector a(2 * n);
            for (size_t k = 0; k < n; k++) {
                if ((mask >> k) & 1) {
                    a ^= l.basis()[k];
                }
            }
            auto p = is_pauli(conjugate_pauli(u, PhasedPauli(a)));
            if (!p || !image.contains(p->a)) {
                throw invariant_error("semi-Clifford witness failed re-verification");
            }
        }
        out.value = true;
        out.witness = SemiCliffordWitness{l, std::move(image)};
        return out;
    }
    return out;
}

GeneralizedSemiCliffordResult is_generalized_semi_clifford(const DenseMatrix &u) {
    require_small(u);
    std::vector<Lagrangian> ls = enumerate_lagrangians(u.num_qubits());
    std::vector<DenseMatrix> qs;
    std::vector<DenseMatrix> qs_adj;
    for (const auto &l : ls) {
        qs.push_back(lagrangian_clifford(l));
        qs_adj.push_back(qs.back().adjoint());
    }
    GeneralizedSemiCliffordResult out;
    for (size_t s = 0; s < ls.size(); s++) {
        DenseMatrix uq = u * qs[s];
        for (size_t t = 0; t < ls.size(); t++) {
            out.pairs_checked++;
            MonomialCheck check = monomial_check(qs_adj[t] * uq);
            if (!check.is_monomial) {
                continue;
            }
            if (!maps_span(u, qs[s], qs_adj[t])) {
                throw invariant_error("generalized semi-Clifford witness failed re-verification");
            }
            out.value = true;
            out.witness = GeneralizedSemiCliffordWitness{ls[s], ls[t], std::move(check)};
            return out;
        }
    }
    return out;
}

ClassificationReport classify(const DenseMatrix &u, int kmax) {
    require_unitary(u);
    ClassificationReport report;
    report.num_qubits = u.num_qubits();
    report.kmax = kmax;
    report.hierarchy_level = hierarchy_level(u, kmax);
    if (u.num_qubits() >= 1 && u.num_qubits() <= kMaxClassifyQubits) {
        report.semi_clifford = is_semi_clifford(u);
        report.generalized_semi_clifford = is_generalized_semi_clifford(u);
        if (report.semi_clifford->value && !report.generalized_semi_clifford->value) {
            throw invariant_error("semi-Clifford gate was not found to be generalized semi-Clifford");
        }
    }
    return report;
}

}  // namespace gsc
