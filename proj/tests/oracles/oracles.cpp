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
#include "oracles.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace gsc::oracle {

namespace {

DenseMatrix single(bool v, bool w) {
    // Z^v X^w.
    complex x00 = w ? 0.0 : 1.0;
    complex x01 = w ? 1.0 : 0.0;
    complex z1 = v ? -1.0 : 1.0;
    return DenseMatrix::from_entries({x00, x01, z1 * x01, z1 * x00});
}

complex unit_power(int k) {
    static const complex table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

}  // namespace

DenseMatrix pauli(bool delta, bool epsilon, const BitVector &a) {
    size_t n = a.size() / 2;
    DenseMatrix out = DenseMatrix::identity(0);
    for (size_t q = 0; q < n; q++) {
        out = kron(out, single(a.get(q), a.get(n + q)));
    }
    out *= unit_power(delta + 2 * epsilon);
    return out;
}

std::vector<complex> pauli_projection(const DenseMatrix &u) {
    size_t n = u.num_qubits();
    uint64_t count = uint64_t{1} << (2 * n);
    std::vector<complex> out(count);
    for (uint64_t mask = 0; mask < count; mask++) {
        DenseMatrix p = pauli(false, false, BitVector::from_mask(mask, 2 * n));
        complex acc = 0;
        for (size_t r = 0; r < u.dim(); r++) {
            for (size_t c = 0; c < u.dim(); c++) {
                acc += std::conj(p(r, c)) * u(r, c);
            }
        }
        out[mask] = acc / static_cast<double>(u.dim());
    }
    return out;
}

std::optional<PauliMatch> match_pauli(const DenseMatrix &m) {
    size_t n = m.num_qubits();
    auto coeffs = pauli_projection(m);
    std::optional<PauliMatch> found;
    for (uint64_t mask = 0; mask < coeffs.size(); mask++) {
        complex z = coeffs[mask];
        if (std::abs(z) < 1e-9) {
            continue;
        }
        if (found) {
            return std::nullopt;
        }
        for (int k = 0; k < 4; k++) {
            if (std::abs(z - unit_power(k)) < 1e-9) {
                found = PauliMatch{k, BitVector::from_mask(mask, 2 * n)};
            }
        }
        if (!found) {
            return std::nullopt;
        }
    }
    return found;
}

std::optional<RepData> clifford_data(const DenseMatrix &u) {
    size_t n = u.num_qubits();
    RepData out{BitMatrix(2 * n, 2 * n), BitVector(2 * n)};
    for (size_t j = 0; j < 2 * n; j++) {
        DenseMatrix conj = u * pauli(false, false, BitVector::unit(2 * n, j)) * u.adjoint();
        auto match = match_pauli(conj);
        if (!match) {
            return std::nullopt;
        }
        // Hermitian conjugates carry i^delta with delta = a^T J a mod 2.
        int ja = 0;
        for (size_t q = 0; q < n; q++) {
            ja ^= match->a.get(q) & match->a.get(n + q);
        }
        int rest = ((match->log_i - ja) % 4 + 4) % 4;
        if (rest % 2 != 0) {
            return std::nullopt;
        }
        for (size_t r = 0; r < 2 * n; r++) {
            out.c.set(r, j, match->a.get(r));
        }
        out.h.set(j, rest == 2);
    }
    return out;
}

bool symplectic_pairing(const BitVector &x, const BitVector &y) {
    size_t n = x.size() / 2;
    bool s = false;
    for (size_t q = 0; q < n; q++) {
        s ^= (x.get(q) & y.get(n + q)) ^ (x.get(n + q) & y.get(q));
    }
    return s;
}

std::vector<BitMatrix> enumerate_symplectic(size_t n) {
    if (n == 0 || n > 2) {
        throw std::invalid_argument("enumerate_symplectic supports n <= 2");
    }
    size_t dim = 2 * n;
    uint64_t total = uint64_t{1} << (dim * dim);
    std::vector<BitMatrix> out;
    for (uint64_t mask = 0; mask < total; mask++) {
        BitMatrix m(dim, dim);
        for (size_t k = 0; k < dim * dim; k++) {
            m.set(k / dim, k % dim, (mask >> k) & 1);
        }
        std::vector<BitVector> cols;
        for (size_t c = 0; c < dim; c++) {
            cols.push_back(m.column(c));
        }
        bool ok = true;
        for (size_t i = 0; i < dim && ok; i++) {
            for (size_t j = 0; j < dim && ok; j++) {
                bool expected = (i + n == j) || (j + n == i);
                ok = symplectic_pairing(cols[i], cols[j]) == expected;
            }
        }
        if (ok) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<BitVector> span_elements(const std::vector<BitVector> &basis) {
    std::set<BitVector> seen;
    size_t len = basis.empty() ? 0 : basis.front().size();
    seen.insert(BitVector(len));
    for (const auto &b : basis) {
        std::vector<BitVector> add;
        for (const auto &s : seen) {
            add.push_back(s + b);
        }
        seen.insert(add.begin(), add.end());
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<BitVector>> lagrangian_groups(size_t n) {
    if (n == 0 || n > 3) {
        throw std::invalid_argument("lagrangian_groups supports n <= 3");
    }
    size_t dim = 2 * n;
    uint64_t count = uint64_t{1} << dim;
    std::set<std::vector<BitVector>> spaces;
    std::vector<uint64_t> pick(n);
    auto rec = [&](auto &&self, size_t depth) -> void {
        if (depth == n) {
            std::vector<BitVector> basis;
            for (uint64_t m : pick) {
                basis.push_back(BitVector::from_mask(m, dim));
            }
            auto elems = span_elements(basis);
            if (elems.size() != (size_t{1} << n)) {
                return;
            }
            for (const auto &x : elems) {
                for (const auto &y : elems) {
                    if (symplectic_pairing(x, y)) {
                        return;
                    }
                }
            }
            spaces.insert(elems);
            return;
        }
        for (uint64_t m = depth == 0 ? 1 : pick[depth - 1] + 1; m < count; m++) {
            pick[depth] = m;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return {spaces.begin(), spaces.end()};
}

size_t count_lagrangians(size_t n) {
    return lagrangian_groups(n).size();
}

bool semi_clifford(const DenseMatrix &u) {
    for (const auto &group : lagrangian_groups(u.num_qubits())) {
        bool all = true;
        for (const auto &a : group) {
            if (!match_pauli(u * pauli(false, false, a) * u.adjoint())) {
                all = false;
                break;
            }
        }
        if (all) {
            return true;
        }
    }
    return false;
}

bool generalized_semi_clifford(const DenseMatrix &u) {
    if (u.num_qubits() > 2) {
        throw std::invalid_argument("generalized_semi_clifford oracle supports n <= 2");
    }
    auto groups = lagrangian_groups(u.num_qubits());
    for (const auto &source : groups) {
        for (const auto &image : groups) {
            if (conjugation_maps_span(u, source, image)) {
                return true;
            }
        }
    }
    return false;
}

std::vector<BitVector> all_solutions(const BitMatrix &m, const BitVector &rhs) {
    if (m.cols() > 16) {
        throw std::invalid_argument("all_solutions supports at most 16 unknowns");
    }
    std::vector<BitVector> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m.cols()); mask++) {
        BitVector x = BitVector::from_mask(mask, m.cols());
        bool ok = true;
        for (size_t r = 0; r < m.rows() && ok; r++) {
            bool s = false;
            for (size_t c = 0; c < m.cols(); c++) {
                s ^= m.get(r, c) & x.get(c);
            }
            ok = s == rhs.get(r);
        }
        if (ok) {
            out.push_back(x);
        }
    }
    return out;
}

size_t rank_by_span(const BitMatrix &m) {
    std::vector<BitVector> rows;
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row(r));
    }
    size_t size = span_elements(rows).size();
    size_t k = 0;
    while ((size_t{1} << k) < size) {
        k++;
    }
    return k;
}

bool conjugation_maps_span(const DenseMatrix &u, const std::vector<BitVector> &source,
                           const std::vector<BitVector> &image) {
    std::vector<DenseMatrix> targets;
    for (const auto &b : image) {
        targets.push_back(pauli(false, false, b));
    }
    double scale = static_cast<double>(u.dim());
    for (const auto &a : source) {
        DenseMatrix m = u * pauli(false, false, a) * u.adjoint();
        DenseMatrix residual = m;
        for (const auto &t : targets) {
            complex coeff = 0;
            for (size_t r = 0; r < u.dim(); r++) {
                for (size_t c = 0; c < u.dim(); c++) {
                    coeff += std::conj(t(r, c)) * m(r, c);
                }
            }
            residual -= (coeff / scale) * t;
        }
        if (residual.max_abs() > 1e-9) {
            return false;
        }
    }
    return true;
}

}  // namespace gsc::oracle
