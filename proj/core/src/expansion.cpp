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

#include "gsc/expansion.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

#include "gsc/pauli.hpp"

namespace gsc {

namespace {

constexpr size_t kMaxExpansionQubits = 7;

}  // namespace

complex ExpansionResult::coefficient(const BitVector &a) const {
    auto it = phases.find(a);
    if (it == phases.end()) {
        return 0.0;
    }
    return magnitude * i_pow(it->second);
}

BitVector alpha_vector(const CliffordRep &rep) {
    size_t dim = rep.c().rows();
    BitMatrix l = sign_form(rep);
    BitVector d = d_vector(rep);
    std::vector<BitVector> kernel = kernel_basis(rep.c() + BitMatrix::identity(dim));
    BitVector values(kernel.size());
    for (size_t i = 0; i < kernel.size(); i++) {
        const BitVector &b = kernel[i];
        if (d.dot(b)) {
            throw invariant_error("alpha_vector: d^T b != 0 on Ker(I + C)");
        }
        for (size_t j = i + 1; j < kernel.size(); j++) {
            if (b.dot(l * kernel[j]) != kernel[j].dot(l * b)) {
                throw invariant_error("alpha_vector: sign form is not linear on Ker(I + C)");
            }
        }
        values.set(i, b.dot(l * b));
    }
    if (kernel.empty()) {
        return BitVector(dim);
    }
    auto alpha = solve(BitMatrix::from_row_vectors(kernel), values);
    if (!alpha) {
        throw invariant_error("alpha_vector: kernel constraints are inconsistent");
    }
    return *alpha;
}

ExpansionResult expand(const CliffordRep &rep) {
    size_t n = rep.num_qubits();
    size_t dim = 2 * n;
    BitMatrix id = BitMatrix::identity(dim);
    BitMatrix n_map = rep.c() + id;
    BitMatrix jm = j_matrix(n);
    BitMatrix l = sign_form(rep);
    BitVector d = d_vector(rep);

    ExpansionResult out;
    out.a0 = symplectic_form(n) * (rep.h() + alpha_vector(rep));
    out.image_basis = column_space_basis(n_map);
    out.s = dim - out.image_basis.size();
    out.magnitude = std::pow(2.0, -0.5 * static_cast<double>(out.image_basis.size()));

    std::vector<BitVector> preimages;
    for (const auto &e : out.image_basis) {
        auto b = solve(n_map, e);
        if (!b) {
            throw invariant_error("expand: image vector without preimage");
        }
        preimages.push_back(*b);
    }

    // r_{a'} = r_a i^{a^T J a - d^T b - a'^T J a'}
    //          (-1)^{b^T J a + h^T b + b^T L b + a'^T J C b},  a' = a + b + C b.
    auto step = [&](const BitVector &a, const BitVector &b, const BitVector &a2) {
        int quarter = static_cast<int>(a.dot(jm * a)) - static_cast<int>(d.dot(b)) - static_cast<int>(a2.dot(jm * a2));
        bool sign = b.dot(jm * a) ^ rep.h().dot(b) ^ b.dot(l * b) ^ a2.dot(jm * (rep.c() * b));
        return static_cast<uint8_t>(((quarter + 2 * sign) % 4 + 4) % 4);
    };

    out.phases[out.a0] = 0;
    std::deque<BitVector> queue{out.a0};
    while (!queue.empty()) {
        BitVector a = queue.front();
        queue.pop_front();
        uint8_t phase = out.phases.at(a);
        for (size_t k = 0; k < preimages.size(); k++) {
            BitVector a2 = a + out.image_basis[k];
            uint8_t next = static_cast<uint8_t>((phase + step(a, preimages[k], a2)) % 4);
            auto [it, inserted] = out.phases.emplace(a2, next);
            if (inserted) {
                queue.push_back(a2);
            } else if (it->second != next) {
                throw invariant_error("expand: coefficient recurrence is path dependent");
            }
        }
    }
    if (out.phases.size() != (size_t{1} << out.image_basis.size())) {
        throw invariant_error("expand: support size differs from 2^{2n - s}");
    }
    return out;
}

DenseMatrix rep_to_dense(const CliffordRep &rep) {
    size_t n = rep.num_qubits();
    if (n > kMaxExpansionQubits) {
        throw std::invalid_argument("rep_to_dense supports at most 7 qubits");
    }
    ExpansionResult ex = expand(rep);
    BitMatrix jm = j_matrix(n);
    DenseMatrix q(n);
    for (const auto &[a, phase] : ex.phases) {
        PhasedPauli p(a);
        complex coeff = ex.magnitude * i_pow(phase + static_cast<int>(a.dot(jm * a)));
        for (size_t col = 0; col < q.dim(); col++) {
            auto img = pauli_apply_basis(p, basis_label(col, n));
            q(basis_index(img.label), col) += coeff * i_pow(img.log_i);
        }
    }
    return q;
}

}  // namespace gsc
