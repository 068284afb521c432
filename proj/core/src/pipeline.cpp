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
#include "gsc/pipeline.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "gsc/expansion.hpp"
#include "gsc/gates.hpp"
#include "gsc/normal_form.hpp"

namespace gsc {

namespace {

std::string index_name(size_t i) {
    return "Q_" + std::to_string(i + 1);
}

BitVector mask_vector(uint64_t mask, size_t len) {
    return BitVector::from_mask(mask, len);
}

}  // namespace

void validate_family(const GeneratorFamily &family, bool dense_checks) {
    size_t n = family.n;
    if (family.qs.size() != 2 * n) {
        throw std::invalid_argument("generator family must have 2n members");
    }
    for (size_t i = 0; i < 2 * n; i++) {
        if (family.qs[i].num_qubits() != n) {
            throw std::invalid_argument(index_name(i) + " acts on the wrong number of qubits");
        }
        if (!compose(family.qs[i], family.qs[i]).is_identity()) {
            throw std::invalid_argument(index_name(i) + " does not square to the identity");
        }
    }
    for (size_t i = 0; i < 2 * n; i++) {
        for (size_t j = i + 1; j < 2 * n; j++) {
            const CliffordRep &a = family.qs[i];
            const CliffordRep &b = family.qs[j];
            if (a.c() * b.c() != b.c() * a.c()) {
                throw std::invalid_argument("C-matrices of " + index_name(i) + " and " + index_name(j) +
                                            " do not commute");
            }
            if (compose(a, b) != compose(b, a)) {
                throw std::invalid_argument("h-vectors of " + index_name(i) + " and " + index_name(j) +
                                            " are incompatible");
            }
        }
    }
    if (!dense_checks || !family.has_dense()) {
        return;
    }
    DenseMatrix id = DenseMatrix::identity(n);
    for (size_t i = 0; i < 2 * n; i++) {
        const DenseMatrix &a = family.dense_qs[i];
        if (!(a * a).approx_equal(id)) {
            throw std::invalid_argument(index_name(i) + " does not square to I");
        }
        for (size_t j = i + 1; j < 2 * n; j++) {
            const DenseMatrix &b = family.dense_qs[j];
            double sign = j == i + n ? -1.0 : 1.0;
            if (!(a * b).approx_equal(sign * (b * a))) {
                throw std::invalid_argument(index_name(i) + " and " + index_name(j) +
                                            " violate the Pauli commutation pattern");
            }
        }
    }
}

GeneratorFamily generators_from_gate(const DenseMatrix &u) {
    size_t n = u.num_qubits();
    if (n == 0 || n > kMaxHierarchyQubits) {
        throw std::invalid_argument("pipeline supports 1 to " + std::to_string(kMaxHierarchyQubits) + " qubits");
    }
    require_unitary(u);
    GeneratorFamily family;
    family.n = n;
    for (size_t j = 0; j < 2 * n; j++) {
        DenseMatrix q = conjugate_pauli(u, PhasedPauli::generator(n, j));
        auto rep = extract_rep(q);
        if (!rep) {
            throw std::invalid_argument("gate is not in C_3: the conjugate " + index_name(j) + " is not Clifford");
        }
        family.qs.push_back(std::move(*rep));
        family.dense_qs.push_back(std::move(q));
    }
    validate_family(family, n <= 3);
    return family;
}

DenseMatrix reconstruct_unitary(const GeneratorFamily &family) {
    if (!family.has_dense()) {
        throw std::invalid_argument("reconstruct_unitary needs the dense generators");
    }
    size_t n = family.n;
    DenseMatrix id = DenseMatrix::identity(n);

    // Lexicographically first sign pattern with a nonzero joint projector.
    std::vector<int> lambda(n, 0);
    std::optional<DenseMatrix> projector;
    auto search = [&](auto &&self, size_t k, const DenseMatrix &prefix) -> bool {
        if (k == n) {
            projector = prefix;
            return true;
        }
        for (int l = 0; l < 2; l++) {
            DenseMatrix factor = id + (l ? -1.0 : 1.0) * family.dense_qs[k];
            factor *= 0.5;
            DenseMatrix next = prefix * factor;
            if (next.max_abs() <= kTolerance) {
                continue;
            }
            lambda[k] = l;
            if (self(self, k + 1, next)) {
                return true;
            }
        }
        return false;
    };
    if (!search(search, 0, id)) {
        throw invariant_error("no common eigenvector of Q_1..Q_n");
    }

    std::vector<complex> alpha;
    for (size_t c = 0; c < id.dim() && alpha.empty(); c++) {
        double norm = 0;
        for (size_t r = 0; r < id.dim(); r++) {
            norm += std::norm((*projector)(r, c));
        }
        if (std::sqrt(norm) <= kTolerance) {
            continue;
        }
        alpha.resize(id.dim());
        for (size_t r = 0; r < id.dim(); r++) {
            alpha[r] = (*projector)(r, c) / std::sqrt(norm);
        }
    }
    for (const auto &z : alpha) {
        if (std::abs(z) > kTolerance) {
            complex gauge = std::conj(z) / std::abs(z);
            for (auto &w : alpha) {
                w *= gauge;
            }
            break;
        }
    }

    DenseMatrix u(n);
    for (size_t col = 0; col < u.dim(); col++) {
        BitVector x = basis_label(col, n);
        std::vector<complex> v = alpha;
        for (size_t q = n; q-- > 0;) {
            if (x.get(q) != static_cast<bool>(lambda[q])) {
                v = family.dense_qs[n + q].apply(v);
            }
        }
        for (size_t r = 0; r < u.dim(); r++) {
            u(r, col) = v[r];
        }
    }
    if (!u.is_unitary()) {
        throw invariant_error("reconstructed operator is not unitary");
    }
    for (size_t i = 0; i < 2 * n; i++) {
        if (!conjugate_pauli(u, PhasedPauli::generator(n, i)).approx_equal(family.dense_qs[i])) {
            throw invariant_error("reconstructed operator does not conjugate the generators onto the family");
        }
    }
    return u;
}

std::pair<GeneratorFamily, CliffordRep> normalize_family(const GeneratorFamily &family) {
    validate_family(family, false);
    std::vector<BitMatrix> cs;
    for (const auto &q : family.qs) {
        cs.push_back(q.c());
    }
    auto nf = commuting_set_normal_form(cs);
    CliffordRep qm(nf.m, BitVector(2 * family.n));
    CliffordRep qm_inv = inverse(qm);

    GeneratorFamily out;
    out.n = family.n;
    for (size_t i = 0; i < family.qs.size(); i++) {
        CliffordRep q = compose(qm, compose(family.qs[i], qm_inv));
        if (q.c() != nf.normalized[i]) {
            throw invariant_error("normalized rep disagrees with the normal form");
        }
        out.qs.push_back(std::move(q));
    }
    if (family.has_dense()) {
        DenseMatrix qm_dense = rep_to_dense(qm);
        DenseMatrix qm_adj = qm_dense.adjoint();
        for (const auto &d : family.dense_qs) {
            out.dense_qs.push_back(qm_dense * d * qm_adj);
        }
    }
    return {std::move(out), std::move(qm)};
}

TMapState build_t_map(GeneratorFamily family, CliffordRep conjugator) {
    size_t n = family.n;
    size_t len = 2 * n;
    for (const auto &q : family.qs) {
        BlockRep::from_rep(q);
    }
    TMapState state;
    uint64_t total = uint64_t{1} << len;
    state.values.assign(total, BitVector(n));
    state.products.assign(total, CliffordRep::identity(n));

    // Gray code: flipping x_k multiplies by Q_k on the right; reordering the
    // factors only changes a global sign, which the reps do not see.
    uint64_t cur = 0;
    CliffordRep rep = CliffordRep::identity(n);
    for (uint64_t i = 1; i < total; i++) {
        size_t k = static_cast<size_t>(std::countr_zero(i));
        cur ^= uint64_t{1} << k;
        rep = compose(rep, family.qs[k]);
        state.products[cur] = rep;
        state.values[cur] = rep.f();
    }

    std::vector<bool> in_kernel(total, false);
    for (uint64_t x = 0; x < total; x++) {
        if (state.values[x].is_zero()) {
            in_kernel[x] = true;
            state.kernel_elements.push_back(x);
        }
    }
    if (state.kernel_elements.size() != (size_t{1} << n)) {
        throw invariant_error("|Ker T| = " + std::to_string(state.kernel_elements.size()) + ", expected 2^n");
    }
    for (uint64_t x : state.kernel_elements) {
        for (uint64_t y : state.kernel_elements) {
            if (!in_kernel[x ^ y]) {
                throw invariant_error("Ker T is not closed under addition");
            }
        }
    }
    std::vector<BitVector> rows;
    for (uint64_t x : state.kernel_elements) {
        rows.push_back(mask_vector(x, len));
    }
    BitMatrix basis = rref(BitMatrix::from_row_vectors(rows));
    if (basis.rows() != n) {
        throw invariant_error("dim Ker T != n");
    }
    for (size_t r = 0; r < n; r++) {
        state.kernel.push_back(basis.row(r));
    }

    std::vector<bool> hit(size_t{1} << n, false);
    size_t image = 0;
    for (uint64_t x = 0; x < total; x++) {
        uint64_t v = state.values[x].to_mask();
        if (!hit[v]) {
            hit[v] = true;
            image++;
        }
        for (const auto &k : state.kernel) {
            if (state.values[x ^ k.to_mask()] != state.values[x]) {
                throw invariant_error("fibres of T are not cosets of Ker T");
            }
        }
    }
    if (image != (size_t{1} << n)) {
        throw invariant_error("T is not surjective");
    }
    for (uint64_t x : state.kernel_elements) {
        if (!state.products[x].c().block(0, 0, n, n).is_identity()) {
            throw invariant_error("A_x != I for a kernel element");
        }
    }

    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 256; trial++) {
        uint64_t x = rng() & (total - 1);
        uint64_t y = rng() & (total - 1);
        BitMatrix ax = state.products[x].c().block(0, 0, n, n);
        if (state.values[x ^ y] != state.values[x] + ax.transpose() * state.values[y]) {
            throw invariant_error("T(x + y) != T(x) + A_x^T T(y)");
        }
    }
    state.family = std::move(family);
    state.conjugator = std::move(conjugator);
    return state;
}

BitVector t_map(const TMapState &state, const BitVector &x) {
    if (x.size() != 2 * state.family.n) {
        throw std::invalid_argument("t_map: argument has the wrong length");
    }
    return state.values.at(x.to_mask());
}

const std::vector<BitVector> &kernel_of_t(const TMapState &state) {
    return state.kernel;
}

GscCertificate extract_certificate(const TMapState &state) {
    size_t n = state.family.n;
    GscCertificate cert;
    cert.conjugator = state.conjugator;
    cert.conjugator_dense = rep_to_dense(state.conjugator);
    cert.kernel_basis = state.kernel;
    cert.kernel_dim = state.kernel.size();
    cert.a_identity_on_kernel = true;
    cert.generators_diagonal = true;

    for (const auto &x : state.kernel) {
        const CliffordRep &rep = state.products[x.to_mask()];
        BlockRep block = BlockRep::from_rep(rep);
        if (!block.a.is_identity() || !block.f.is_zero()) {
            cert.a_identity_on_kernel = false;
            throw invariant_error("kernel product does not have A = I and f = 0");
        }
        DenseMatrix d = realize_block(block);
        if (!d.is_diagonal()) {
            cert.generators_diagonal = false;
            throw invariant_error("kernel product is not diagonal");
        }
        if (state.family.has_dense()) {
            DenseMatrix product = DenseMatrix::identity(n);
            for (size_t k = 0; k < 2 * n; k++) {
                if (x.get(k)) {
                    product = product * state.family.dense_qs[k];
                }
            }
            if (!product.equal_up_to_phase(d)) {
                throw invariant_error("realized kernel product disagrees with the dense product");
            }
        }
        cert.diagonal_generators.push_back(std::move(d));
    }

    size_t dim = size_t{1} << n;
    std::vector<std::vector<complex>> patterns;
    for (uint64_t s = 0; s < (uint64_t{1} << n); s++) {
        std::vector<complex> row(dim, 1.0);
        for (size_t g = 0; g < n; g++) {
            if ((s >> g) & 1) {
                for (size_t k = 0; k < dim; k++) {
                    row[k] *= cert.diagonal_generators[g](k, k);
                }
            }
        }
        patterns.push_back(std::move(row));
    }
    cert.pattern_rank = numerical_rank(std::move(patterns));
    if (!cert.complete()) {
        throw invariant_error("diagonal patterns are not independent");
    }
    return cert;
}

PipelineResult run_pipeline(const DenseMatrix &u) {
    GeneratorFamily family = generators_from_gate(u);
    auto [normalized, qm] = normalize_family(family);
    TMapState state = build_t_map(std::move(normalized), std::move(qm));
    GscCertificate cert = extract_certificate(state);
    return {std::move(family), std::move(state), std::move(cert)};
}

std::pair<DenseMatrix, DenseMatrix> gottesman_mochon() {
    constexpr size_t n = 7;
    DenseMatrix u = DenseMatrix::identity(n);
    DenseMatrix cswap = gate_matrix("CSWAP");
    for (size_t i = 0; i < 3; i++) {
        std::vector<size_t> q = {kGottesmanMochonControl, i, i + 3};
        apply_gate(u, cswap, q);
    }
    DenseMatrix v = DenseMatrix::identity(n);
    DenseMatrix ccz = gate_matrix("CCZ");
    const std::vector<std::vector<size_t>> triples = {{0, 1, 2}, {0, 4, 5}, {3, 1, 5}, {3, 4, 2}};
    for (const auto &t : triples) {
        apply_gate(v, ccz, t);
    }
    return {std::move(u), std::move(v)};
}

CounterexampleVerdict verify_counterexample() {
    auto [u, v] = gottesman_mochon();
    DenseMatrix uv = u * v;
    DenseMatrix vu = v * u;
    CounterexampleVerdict out;
    out.uv_level = hierarchy_level(uv, 3);
    out.uv_in_c3 = out.uv_level.has_value();
    out.vu_in_c3 = hierarchy_level(vu, 3).has_value();
    size_t n = vu.num_qubits();
    out.vu_witness_on_control =
        !extract_rep(conjugate_pauli(vu, PhasedPauli::generator(n, n + kGottesmanMochonControl))).has_value();
    if (out.uv_in_c3) {
        out.uv_pipeline = run_pipeline(uv);
    }
    return out;
}

}  // namespace gsc
