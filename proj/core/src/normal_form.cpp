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
#include "gsc/normal_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gsc {

namespace {

BitMatrix conjugate_matrix(const BitMatrix &m, const BitMatrix &c) {
    return m * c * inverse(m);
}

bool is_nice_form(const BitMatrix &c) {
    size_t n = c.rows() / 2;
    return c.block(0, 0, n, n).is_identity() && c.block(n, n, n, n).is_identity() &&
           c.block(n, 0, n, n).is_zero() && c.block(0, n, n, n).is_symmetric();
}

bool is_block_form(const BitMatrix &c) {
    size_t n = c.rows() / 2;
    return c.block(n, 0, n, n).is_zero();
}

/// Coordinates of a qubit range [lo, hi) in z-then-x order.
std::vector<size_t> qubit_coords(size_t n, size_t lo, size_t hi) {
    std::vector<size_t> out;
    for (size_t k = lo; k < hi; k++) {
        out.push_back(k);
    }
    for (size_t k = lo; k < hi; k++) {
        out.push_back(n + k);
    }
    return out;
}

BitMatrix restrict_to(const BitMatrix &c, const std::vector<size_t> &coords) {
    BitMatrix out(coords.size(), coords.size());
    for (size_t i = 0; i < coords.size(); i++) {
        for (size_t j = 0; j < coords.size(); j++) {
            out.set(i, j, c.get(coords[i], coords[j]));
        }
    }
    return out;
}

/// Writes part onto the given coordinates of target.
void place(BitMatrix &target, const BitMatrix &part, const std::vector<size_t> &coords) {
    for (size_t i = 0; i < coords.size(); i++) {
        for (size_t j = 0; j < coords.size(); j++) {
            target.set(coords[i], coords[j], part.get(i, j));
        }
    }
}

/// Invertible R whose last n - r rows span ker(E); then R E R^T = (e 0; 0 0)
/// with e invertible.
BitMatrix rank_normalizer(const BitMatrix &e_block) {
    size_t n = e_block.rows();
    std::vector<BitVector> kernel = kernel_basis(e_block);
    std::vector<BitVector> units;
    for (size_t k = 0; k < n; k++) {
        units.push_back(BitVector::unit(n, k));
    }
    std::vector<BitVector> full = extend_to_basis(kernel, units);
    std::vector<BitVector> rows(full.begin() + static_cast<std::ptrdiff_t>(kernel.size()), full.end());
    rows.insert(rows.end(), kernel.begin(), kernel.end());
    return BitMatrix::from_row_vectors(rows);
}

BitMatrix block_diag(const BitMatrix &top, const BitMatrix &bottom) {
    size_t n = top.rows();
    return BitMatrix::from_blocks(top, BitMatrix::zero(n, n), BitMatrix::zero(n, n), bottom);
}

void check_level(const BitMatrix &m, const BitMatrix &c, const char *stage) {
    if (!is_symplectic(m)) {
        throw invariant_error(std::string("normal form: conjugator is not symplectic after ") + stage);
    }
    if (!is_nice_form(conjugate_matrix(m, c))) {
        throw invariant_error(std::string("normal form: target shape not reached after ") + stage);
    }
}

BitMatrix jordan_case(const BitMatrix &c) {
    size_t n = c.rows() / 2;
    BitMatrix a = c.block(0, 0, n, n);
    BitMatrix nil = a + BitMatrix::identity(n);

    // Basis [y_1, N y_1, ..., z_1, ...]: A y = y + N y and A N y = N y give
    // lower 2-blocks (1 0; 1 1), the z's complete Im N to ker N.
    std::vector<BitVector> basis;
    std::vector<BitVector> image;
    std::vector<size_t> two_blocks;
    for (size_t p = 0; p < n; p++) {
        BitVector y = BitVector::unit(n, p);
        BitVector ny = nil * y;
        if (ny.is_zero()) {
            continue;
        }
        auto trial = image;
        trial.push_back(ny);
        if (rank(BitMatrix::from_row_vectors(trial)) != trial.size()) {
            continue;
        }
        image.push_back(ny);
        two_blocks.push_back(basis.size());
        basis.push_back(y);
        basis.push_back(ny);
    }
    std::vector<BitVector> kernel_complete = extend_to_basis(image, kernel_basis(nil));
    basis.insert(basis.end(), kernel_complete.begin() + static_cast<std::ptrdiff_t>(image.size()),
                 kernel_complete.end());
    if (basis.size() != n) {
        throw invariant_error("normal form: Jordan basis has the wrong size");
    }
    BitMatrix g = inverse(BitMatrix::from_columns(basis));
    BitMatrix m = block_diag(g, inverse(g).transpose());

    // Exchanging z and x on the first qubit of each 2-block lands in the
    // target shape with E = (0 1; 1 0) on that block.
    BitMatrix swap = BitMatrix::identity(2 * n);
    for (size_t i : two_blocks) {
        swap.set(i, i, false);
        swap.set(n + i, n + i, false);
        swap.set(i, n + i, true);
        swap.set(n + i, i, true);
    }
    return swap * m;
}

BitMatrix normalize(const BitMatrix &c) {
    size_t n = c.rows() / 2;
    if (is_nice_form(c)) {
        return BitMatrix::identity(2 * n);
    }
    BitMatrix e_block = c.block(0, n, n, n);
    size_t r = rank(e_block);

    if (r == 0) {
        BitMatrix m;
        if (!c.block(n, 0, n, n).is_zero()) {
            BitMatrix p = symplectic_form(n);
            m = normalize(p * c * p) * p;
        } else {
            m = jordan_case(c);
        }
        check_level(m, c, r == 0 && c.block(n, 0, n, n).is_zero() ? "the Jordan step" : "the z/x exchange");
        return m;
    }

    BitMatrix rr = rank_normalizer(e_block);
    BitMatrix m1 = block_diag(rr, inverse(rr).transpose());
    BitMatrix c1 = conjugate_matrix(m1, c);

    BitMatrix e = c1.block(0, n, r, r);
    BitMatrix e_inv = inverse(e);
    BitMatrix a1 = c1.block(0, 0, r, r);
    BitMatrix a2 = c1.block(0, r, r, n - r);
    BitMatrix s(n, n);
    s.set_block(0, 0, e_inv * a1);
    if (r < n) {
        BitMatrix ea2 = e_inv * a2;
        s.set_block(0, r, ea2);
        s.set_block(r, 0, ea2.transpose());
    }
    BitMatrix m2 = BitMatrix::from_blocks(BitMatrix::identity(n), BitMatrix::zero(n, n), s, BitMatrix::identity(n));
    BitMatrix c2 = conjugate_matrix(m2, c1);

    std::vector<size_t> xs = qubit_coords(n, 0, r);
    std::vector<size_t> ys = qubit_coords(n, r, n);
    BitMatrix expected_x = BitMatrix::from_blocks(BitMatrix::zero(r, r), e, e_inv, BitMatrix::zero(r, r));
    if (restrict_to(c2, xs) != expected_x) {
        throw invariant_error("normal form: split block is not (0 e; e^{-1} 0)");
    }

    BitMatrix m3 = BitMatrix::zero(2 * n, 2 * n);
    place(m3, BitMatrix::from_blocks(BitMatrix::identity(r), BitMatrix::zero(r, r), e_inv, BitMatrix::identity(r)),
          xs);
    if (r < n) {
        BitMatrix cy = restrict_to(c2, ys);
        BitMatrix rebuilt = BitMatrix::zero(2 * n, 2 * n);
        place(rebuilt, expected_x, xs);
        place(rebuilt, cy, ys);
        if (rebuilt != c2 || !cy.block(0, n - r, n - r, n - r).is_zero()) {
            throw invariant_error("normal form: residual block does not split off");
        }
        place(m3, normalize(cy), ys);
    }
    BitMatrix m = m3 * m2 * m1;
    check_level(m, c, "the rank split");
    return m;
}

void require_involution(const BitMatrix &c, const std::string &what) {
    if (!c.is_square() || c.rows() % 2 != 0 || !is_symplectic_involution(c)) {
        throw std::invalid_argument(what + " is not a symplectic involution");
    }
}

BitMatrix normalize_set(const std::vector<BitMatrix> &cs, size_t n) {
    BitMatrix identity = BitMatrix::identity(2 * n);
    auto first = std::find_if(cs.begin(), cs.end(), [](const BitMatrix &c) { return !c.is_identity(); });
    if (first == cs.end()) {
        return identity;
    }
    BitMatrix m0 = normalize(*first);
    BitMatrix e_block = conjugate_matrix(m0, *first).block(0, n, n, n);
    size_t r = rank(e_block);
    BitMatrix rr = rank_normalizer(e_block);
    BitMatrix m = block_diag(rr, inverse(rr).transpose()) * m0;

    std::vector<BitMatrix> subs;
    for (const auto &c : cs) {
        BitMatrix d = conjugate_matrix(m, c);
        // a_3, f_1 and f_2 vanish because e is invertible.
        if (!d.block(r, 0, n - r, r).is_zero() || !d.block(n, 0, r, n).is_zero() ||
            !d.block(n + r, 0, n - r, r).is_zero()) {
            throw invariant_error("commuting normal form: blocks a3, f1, f2 did not vanish");
        }
        if (r < n) {
            subs.push_back(restrict_to(d, qubit_coords(n, r, n)));
        }
    }
    if (r == n) {
        return m;
    }
    BitMatrix lift = identity;
    place(lift, normalize_set(subs, n - r), qubit_coords(n, r, n));
    m = lift * m;
    if (!is_symplectic(m)) {
        throw invariant_error("commuting normal form: conjugator is not symplectic");
    }
    return m;
}

}  // namespace

bool is_symplectic_involution(const BitMatrix &c) {
    return c.is_square() && c.rows() % 2 == 0 && is_symplectic(c) && (c * c).is_identity();
}

NormalFormResult involution_normal_form(const BitMatrix &c) {
    require_involution(c, "input");
    BitMatrix m = normalize(c);
    BitMatrix normalized = conjugate_matrix(m, c);
    check_level(m, c, "normalization");
    return {std::move(m), std::move(normalized)};
}

CommutingNormalFormResult commuting_set_normal_form(const std::vector<BitMatrix> &cs) {
    if (cs.empty()) {
        throw std::invalid_argument("commuting_set_normal_form needs at least one matrix");
    }
    size_t dim = cs.front().rows();
    for (size_t i = 0; i < cs.size(); i++) {
        if (cs[i].rows() != dim) {
            throw std::invalid_argument("element " + std::to_string(i) + " has a different size");
        }
        require_involution(cs[i], "element " + std::to_string(i));
    }
    for (size_t i = 0; i < cs.size(); i++) {
        for (size_t j = i + 1; j < cs.size(); j++) {
            if (cs[i] * cs[j] != cs[j] * cs[i]) {
                throw std::invalid_argument("elements " + std::to_string(i) + " and " + std::to_string(j) +
                                            " do not commute");
            }
        }
    }
    CommutingNormalFormResult out;
    out.m = normalize_set(cs, dim / 2);
    BitMatrix m_inv = inverse(out.m);
    for (size_t i = 0; i < cs.size(); i++) {
        BitMatrix d = out.m * cs[i] * m_inv;
        if (!is_block_form(d)) {
            throw invariant_error("commuting normal form: element " + std::to_string(i) + " is not block form");
        }
        out.normalized.push_back(std::move(d));
    }
    return out;
}

bool simultaneous_nice_form_obstruction(const BitMatrix &c1, const BitMatrix &c2) {
    require_involution(c1, "first matrix");
    require_involution(c2, "second matrix");
    if (c1.rows() != c2.rows() || c1 * c2 != c2 * c1) {
        throw std::invalid_argument("obstruction test needs two commuting involutions of equal size");
    }
    BitMatrix id = BitMatrix::identity(c1.rows());
    return !((id + c1) * (id + c2)).is_zero();
}

}  // namespace gsc
