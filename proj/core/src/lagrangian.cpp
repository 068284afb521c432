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

#include "gsc/lagrangian.hpp"

#include <set>

namespace gsc {

Lagrangian::Lagrangian(const std::vector<BitVector> &spanning) {
    if (spanning.empty() || spanning.front().size() % 2 != 0) {
        throw std::invalid_argument("Lagrangian needs a non-empty set of even-length vectors");
    }
    n_ = spanning.front().size() / 2;
    for (size_t i = 0; i < spanning.size(); i++) {
        for (size_t j = i + 1; j < spanning.size(); j++) {
            if (symplectic_product(spanning[i], spanning[j])) {
                throw std::invalid_argument("Lagrangian basis is not isotropic");
            }
        }
    }
    BitMatrix reduced = rref(BitMatrix::from_row_vectors(spanning));
    if (reduced.rows() != n_) {
        throw std::invalid_argument("Lagrangian basis does not have rank n");
    }
    basis_.reserve(n_);
    for (size_t r = 0; r < n_; r++) {
        basis_.push_back(reduced.row(r));
    }
}

Lagrangian Lagrangian::z_type(size_t n) {
    std::vector<BitVector> b;
    for (size_t k = 0; k < n; k++) {
        b.push_back(BitVector::unit(2 * n, k));
    }
    return Lagrangian(b);
}

Lagrangian Lagrangian::x_type(size_t n) {
    std::vector<BitVector> b;
    for (size_t k = 0; k < n; k++) {
        b.push_back(BitVector::unit(2 * n, n + k));
    }
    return Lagrangian(b);
}

bool Lagrangian::contains(const BitVector &v) const {
    auto rows = basis_;
    rows.push_back(v);
    return rank(BitMatrix::from_row_vectors(rows)) == n_;
}

BitMatrix symplectic_complete(const Lagrangian &l) {
    size_t n = l.num_qubits();
    const auto &ls = l.basis();

    // Dual vectors: m_j with l_i^T P m_j = [i == j].
    BitMatrix constraints(n, 2 * n);
    BitMatrix p = symplectic_form(n);
    for (size_t i = 0; i < n; i++) {
        constraints.row(i) = p * ls[i];
    }
    std::vector<BitVector> ms;
    ms.reserve(n);
    for (size_t j = 0; j < n; j++) {
        auto m = solve(constraints, BitVector::unit(n, j));
        if (!m) {
            throw invariant_error("symplectic_complete: no dual vector for an independent basis");
        }
        ms.push_back(*m);
    }

    // Make the duals mutually isotropic: m_i += sum_{j > i} <m_i, m_j> l_j.
    std::vector<BitVector> fixed = ms;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (symplectic_product(ms[i], ms[j])) {
                fixed[i] ^= ls[j];
            }
        }
    }

    std::vector<BitVector> columns = ls;
    columns.insert(columns.end(), fixed.begin(), fixed.end());
    BitMatrix c = BitMatrix::from_columns(columns);
    if (!is_symplectic(c)) {
        throw invariant_error("symplectic_complete produced a non-symplectic matrix");
    }
    return c;
}

std::vector<Lagrangian> enumerate_lagrangians(size_t n) {
    if (n == 0 || n > 3) {
        throw std::invalid_argument("enumerate_lagrangians supports 1 <= n <= 3");
    }
    size_t dim = 2 * n;
    uint64_t count = uint64_t{1} << dim;

    // Depth-first over increasing vector masks; every isotropic independent
    // n-tuple reaches each subspace, the set deduplicates via canonical form.
    std::set<Lagrangian> found;
    std::vector<BitVector> chosen;
    auto dfs = [&](auto &&self, uint64_t start) -> void {
        if (chosen.size() == n) {
            found.insert(Lagrangian(chosen));
            return;
        }
        for (uint64_t mask = start; mask < count; mask++) {
            BitVector v = BitVector::from_mask(mask, dim);
            bool ok = true;
            for (const auto &c : chosen) {
                if (symplectic_product(c, v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) {
                continue;
            }
            chosen.push_back(v);
            if (rank(BitMatrix::from_row_vectors(chosen)) == chosen.size()) {
                self(self, mask + 1);
            }
            chosen.pop_back();
        }
    };
    dfs(dfs, 1);
    return {found.begin(), found.end()};
}

}  // namespace gsc
