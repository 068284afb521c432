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
#include "gsc/dense_engine.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gsc {

namespace {

std::optional<int> nearest_i_power(complex z, double tol) {
    for (int k = 0; k < 4; k++) {
        if (std::abs(z - i_pow(k)) <= tol) {
            return k;
        }
    }
    return std::nullopt;
}

bool in_level(const DenseMatrix &u, int k) {
    size_t n = u.num_qubits();
    switch (k) {
        case 1:
            return is_pauli(u).has_value();
        case 2:
            return extract_rep(u).has_value();
        case 3:
            for (size_t j = 0; j < 2 * n; j++) {
                if (!extract_rep(conjugate_pauli(u, PhasedPauli::generator(n, j)))) {
                    return false;
                }
            }
            return true;
        default:
            for (uint64_t mask = 1; mask < (uint64_t{1} << (2 * n)); mask++) {
                if (!in_level(conjugate_pauli(u, PhasedPauli(BitVector::from_mask(mask, 2 * n))), k - 1)) {
                    return false;
                }
            }
            return true;
    }
}

}  // namespace

void require_unitary(const DenseMatrix &u) {
    if (!u.is_unitary()) {
        throw std::invalid_argument("matrix is not unitary within tolerance");
    }
}

DenseMatrix conjugate_pauli(const DenseMatrix &u, const PhasedPauli &p) {
    size_t n = u.num_qubits();
    if (p.num_qubits() != n) {
        throw std::invalid_argument("Pauli and matrix act on different qubit counts");
    }
    DenseMatrix w(n);
    for (size_t col = 0; col < u.dim(); col++) {
        auto img = pauli_apply_basis(p, basis_label(col, n));
        size_t k = basis_index(img.label);
        complex ph = i_pow(img.log_i);
        for (size_t r = 0; r < u.dim(); r++) {
            w(r, col) = ph * u(r, k);
        }
    }
    return w * u.adjoint();
}

std::optional<PhasedPauli> is_pauli(const DenseMatrix &u) {
    size_t n = u.num_qubits();
    size_t r0 = 0;
    size_t hits = 0;
    for (size_t r = 0; r < u.dim(); r++) {
        if (std::abs(u(r, 0)) > kTolerance) {
            r0 = r;
            hits++;
        }
    }
    if (hits != 1) {
        return std::nullopt;
    }
    complex anchor = u(r0, 0);
    BitVector w = basis_label(r0, n);
    BitVector v(n);
    for (size_t k = 0; k < n; k++) {
        BitVector ek = BitVector::unit(n, k);
        complex ratio = u(basis_index(ek + w), basis_index(ek)) / anchor;
        if (std::abs(ratio + 1.0) <= kTolerance) {
            v.set(k, true);
        } else if (std::abs(ratio - 1.0) > kTolerance) {
            return std::nullopt;
        }
    }
    auto k = nearest_i_power(v.dot(w) ? -anchor : anchor, kTolerance);
    if (!k) {
        return std::nullopt;
    }
    PhasedPauli p(*k & 1, (*k >> 1) & 1, BitVector::concat(v, w));
    if (!u.approx_equal(pauli_to_dense(p))) {
        return std::nullopt;
    }
    return p;
}

std::optional<CliffordRep> extract_rep(const DenseMatrix &u) {
    size_t n = u.num_qubits();
    BitMatrix jm = j_matrix(n);
    std::vector<BitVector> columns;
    BitVector h(2 * n);
    for (size_t j = 0; j < 2 * n; j++) {
        auto p = is_pauli(conjugate_pauli(u, PhasedPauli::generator(n, j)));
        if (!p) {
            return std::nullopt;
        }
        if (p->delta != p->a.dot(jm * p->a)) {
            return std::nullopt;
        }
        h.set(j, p->epsilon);
        columns.push_back(p->a);
    }
    BitMatrix c = BitMatrix::from_columns(columns);
    if (!is_symplectic(c)) {
        return std::nullopt;
    }
    return CliffordRep(std::move(c), std::move(h));
}

std::optional<int> hierarchy_level(const DenseMatrix &u, int kmax) {
    size_t n = u.num_qubits();
    if (n > kMaxHierarchyQubits) {
        throw std::invalid_argument("hierarchy_level supports at most " + std::to_string(kMaxHierarchyQubits) +
                                    " qubits");
    }
    if (kmax < 1 || kmax > 4) {
        throw std::invalid_argument("kmax must lie in [1, 4]");
    }
    if (kmax == 4 && n > 3) {
        throw std::invalid_argument("the C_4 test is limited to 3 qubits");
    }
    for (int k = 1; k <= kmax; k++) {
        if (in_level(u, k)) {
            return k;
        }
    }
    return std::nullopt;
}

BitVector BlockRep::d0() const {
    return diag(a * e);
}

CliffordRep BlockRep::to_rep() const {
    size_t n = num_qubits();
    return CliffordRep(BitMatrix::from_blocks(a, e, BitMatrix::zero(n, n), a.transpose()), BitVector::concat(f, g));
}

BlockRep BlockRep::from_rep(const CliffordRep &rep) {
    size_t n = rep.num_qubits();
    const BitMatrix &c = rep.c();
    if (!c.block(n, 0, n, n).is_zero()) {
        throw std::invalid_argument("rep is not in block form: lower-left block is nonzero");
    }
    BlockRep b{c.block(0, 0, n, n), c.block(0, n, n, n), rep.f(), rep.g()};
    if (c.block(n, n, n, n) != b.a.transpose()) {
        throw std::invalid_argument("rep is not in block form: lower-right block is not A^T");
    }
    return b;
}

void BlockRep::validate() const {
    size_t n = num_qubits();
    if (a.rows() != n || a.cols() != n || e.rows() != n || e.cols() != n || f.size() != n || g.size() != n) {
        throw std::invalid_argument("block rep has inconsistent shapes");
    }
    if (!(a * a).is_identity()) {
        throw std::invalid_argument("block rep: A^2 != I");
    }
    if (!e.is_symmetric() || !(a * e).is_symmetric()) {
        throw std::invalid_argument("block rep: E or AE is not symmetric");
    }
    if (a.transpose() * f != f) {
        throw std::invalid_argument("block rep: A^T f != f");
    }
    CliffordRep rep = to_rep();
    if (!compose(rep, rep).is_identity()) {
        throw std::invalid_argument("block rep does not square to the identity");
    }
}

uint8_t BlockRep::lambda_product_log_i(const BitVector &y) const {
    BitVector d = d0();
    BitMatrix l = lows(a * e + outer(d, d));
    int dy = d.dot(y);
    int sign = dy ^ g.dot(y) ^ y.dot(l * y);
    return static_cast<uint8_t>((dy + 2 * sign) % 4);
}

DenseMatrix realize_block(const BlockRep &rep) {
    rep.validate();
    size_t n = rep.num_qubits();
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument("realize_block: too many qubits for a dense matrix");
    }
    // Principal root of i^k: half of its argument taken in (-pi, pi].
    int k = rep.lambda_product_log_i(rep.f);
    complex lambda0 = std::polar(1.0, (k == 3 ? -1 : k) * std::numbers::pi / 4);

    BitMatrix at = rep.a.transpose();
    DenseMatrix q(n);
    for (size_t yi = 0; yi < q.dim(); yi++) {
        BitVector y = basis_label(yi, n);
        BitVector x = rep.f + y;
        complex lambda_x = i_pow(rep.lambda_product_log_i(y)) / lambda0;
        q(basis_index(rep.f + at * x), basis_index(x)) = lambda_x;
    }
    return q;
}

int commutator_sign(const BlockRep &q, const BlockRep &q2) {
    q.validate();
    q2.validate();
    if (q.num_qubits() != q2.num_qubits()) {
        throw std::invalid_argument("commutator_sign: reps act on different qubit counts");
    }
    CliffordRep r1 = q.to_rep();
    CliffordRep r2 = q2.to_rep();
    if (r1.c() * r2.c() != r2.c() * r1.c()) {
        throw std::invalid_argument("commutator_sign: C-matrices do not commute");
    }
    if (compose(r1, r2) != compose(r2, r1)) {
        throw std::invalid_argument("commutator_sign: h-vectors are incompatible");
    }
    if (q2.f + q.a.transpose() * q2.f != q.f + q2.a.transpose() * q.f) {
        throw std::invalid_argument("commutator_sign: f-vectors are incompatible");
    }
    BitVector s = q.f + q2.f;
    int lhs = q.lambda_product_log_i(q.f) + q2.lambda_product_log_i(s);
    int rhs = q2.lambda_product_log_i(q2.f) + q.lambda_product_log_i(s);
    switch (((lhs - rhs) % 4 + 4) % 4) {
        case 0:
            return 1;
        case 2:
            return -1;
        default:
            throw invariant_error("commutator_sign: phase relation is not a sign");
    }
}

MonomialCheck monomial_check(const DenseMatrix &u, double tol) {
    MonomialCheck out;
    std::vector<bool> used(u.dim(), false);
    out.permutation.resize(u.dim());
    out.phases.resize(u.dim());
    for (size_t c = 0; c < u.dim(); c++) {
        size_t hits = 0;
        for (size_t r = 0; r < u.dim(); r++) {
            if (std::abs(u(r, c)) > tol) {
                hits++;
                out.permutation[c] = r;
            }
        }
        if (hits != 1 || used[out.permutation[c]]) {
            return MonomialCheck{};
        }
        used[out.permutation[c]] = true;
        out.phases[c] = u(out.permutation[c], c);
    }
    out.is_monomial = true;
    return out;
}

}  // namespace gsc
