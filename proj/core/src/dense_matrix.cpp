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

#include "gsc/dense_matrix.hpp"

#include <bit>
#include <cmath>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace gsc {

namespace {

size_t qubits_for_dim(size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("dense matrix dimension must be a power of two");
    }
    return static_cast<size_t>(std::countr_zero(dim));
}

}  // namespace

DenseMatrix::DenseMatrix(size_t num_qubits) : n_(num_qubits), dim_(size_t{1} << num_qubits) {
    if (num_qubits > kMaxDenseQubits) {
        throw std::invalid_argument("dense matrices are limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    data_.assign(dim_ * dim_, complex{0.0});
}

DenseMatrix DenseMatrix::identity(size_t num_qubits) {
    DenseMatrix m(num_qubits);
    for (size_t k = 0; k < m.dim_; k++) {
        m(k, k) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const complex> entries) {
    DenseMatrix m(qubits_for_dim(entries.size()));
    for (size_t k = 0; k < entries.size(); k++) {
        m(k, k) = entries[k];
    }
    return m;
}

DenseMatrix DenseMatrix::from_entries(std::vector<complex> entries) {
    size_t dim = static_cast<size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (dim * dim != entries.size()) {
        throw std::invalid_argument("entry count is not a perfect square");
    }
    DenseMatrix m(qubits_for_dim(dim));
    m.data_ = std::move(entries);
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(n_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

complex DenseMatrix::trace() const {
    complex t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0;
    for (const auto &z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &other) {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("dense sum dimension mismatch");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator-=(const DenseMatrix &other) {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("dense difference dimension mismatch");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw std::invalid_argument("dense product dimension mismatch");
    }
    size_t d = a.dim_;
    DenseMatrix out(a.n_);
    for (size_t r = 0; r < d; r++) {
        complex *orow = &out.data_[r * d];
        for (size_t k = 0; k < d; k++) {
            complex s = a.data_[r * d + k];
            if (s == complex{0.0}) {
                continue;
            }
            const complex *brow = &b.data_[k * d];
            for (size_t c = 0; c < d; c++) {
                orow[c] += s * brow[c];
            }
        }
    }
    return out;
}

std::vector<complex> DenseMatrix::apply(std::span<const complex> v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("dense apply dimension mismatch");
    }
    std::vector<complex> out(dim_, complex{0.0});
    for (size_t r = 0; r < dim_; r++) {
        complex acc = 0;
        for (size_t c = 0; c < dim_; c++) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

bool DenseMatrix::is_unitary(double tol) const {
    return (adjoint() * *this).approx_equal(identity(n_), tol);
}

bool DenseMatrix::is_diagonal(double tol) const {
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            if (r != c && std::abs((*this)(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool DenseMatrix::approx_equal(const DenseMatrix &other, double tol) const {
    if (dim_ != other.dim_) {
        return false;
    }
    for (size_t k = 0; k < data_.size(); k++) {
        if (std::abs(data_[k] - other.data_[k]) > tol) {
            return false;
        }
    }
    return true;
}

std::optional<complex> DenseMatrix::phase_relative_to(const DenseMatrix &other, double tol) const {
    if (dim_ != other.dim_) {
        return std::nullopt;
    }
    size_t best = 0;
    double best_abs = -1;
    for (size_t k = 0; k < other.data_.size(); k++) {
        double a = std::abs(other.data_[k]);
        if (a > best_abs) {
            best_abs = a;
            best = k;
        }
    }
    if (best_abs <= tol) {
        return std::nullopt;
    }
    complex c = data_[best] / other.data_[best];
    if (std::abs(std::abs(c) - 1.0) > tol * 1e3) {
        return std::nullopt;
    }
    c /= std::abs(c);
    for (size_t k = 0; k < data_.size(); k++) {
        if (std::abs(data_[k] - c * other.data_[k]) > tol) {
            return std::nullopt;
        }
    }
    return c;
}

DenseMatrix conjugate_by(const DenseMatrix &u, const DenseMatrix &m) {
    return u * m * u.adjoint();
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.num_qubits() + b.num_qubits());
    size_t db = b.dim();
    for (size_t ar = 0; ar < a.dim(); ar++) {
        for (size_t ac = 0; ac < a.dim(); ac++) {
            complex s = a(ar, ac);
            if (s == complex{0.0}) {
                continue;
            }
            for (size_t br = 0; br < db; br++) {
                for (size_t bc = 0; bc < db; bc++) {
                    out(ar * db + br, ac * db + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

void apply_gate(DenseMatrix &u, const DenseMatrix &gate, std::span<const size_t> qubits) {
    size_t n = u.num_qubits();
    size_t k = qubits.size();
    if (gate.num_qubits() != k) {
        throw std::invalid_argument("gate arity does not match the qubit list");
    }
    std::vector<size_t> shift(k);
    size_t touched = 0;
    for (size_t j = 0; j < k; j++) {
        if (qubits[j] >= n) {
            throw std::invalid_argument("gate qubit index out of range");
        }
        shift[j] = n - 1 - qubits[j];
        size_t bit = size_t{1} << shift[j];
        if (touched & bit) {
            throw std::invalid_argument("gate qubits must be distinct");
        }
        touched |= bit;
    }
    size_t gdim = gate.dim();
    // Full index for a base (touched bits cleared) and a local gate index.
    auto spread = [&](size_t base, size_t local) {
        size_t idx = base;
        for (size_t j = 0; j < k; j++) {
            if ((local >> (k - 1 - j)) & 1) {
                idx |= size_t{1} << shift[j];
            }
        }
        return idx;
    };
    std::vector<complex> in(gdim);
    std::vector<size_t> rows(gdim);
    for (size_t base = 0; base < u.dim(); base++) {
        if (base & touched) {
            continue;
        }
        for (size_t l = 0; l < gdim; l++) {
            rows[l] = spread(base, l);
        }
        for (size_t col = 0; col < u.dim(); col++) {
            for (size_t l = 0; l < gdim; l++) {
                in[l] = u(rows[l], col);
            }
            for (size_t l = 0; l < gdim; l++) {
                complex acc = 0;
                for (size_t m = 0; m < gdim; m++) {
                    acc += gate(l, m) * in[m];
                }
                u(rows[l], col) = acc;
            }
        }
    }
}

DenseMatrix embed_gate(const DenseMatrix &gate, std::span<const size_t> qubits, size_t n) {
    DenseMatrix u = DenseMatrix::identity(n);
    apply_gate(u, gate, qubits);
    return u;
}

size_t numerical_rank(std::vector<std::vector<complex>> rows, double tol) {
    if (rows.empty()) {
        return 0;
    }
    size_t cols = rows.front().size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); c++) {
        size_t best = r;
        for (size_t k = r + 1; k < rows.size(); k++) {
            if (std::abs(rows[k][c]) > std::abs(rows[best][c])) {
                best = k;
            }
        }
        if (std::abs(rows[best][c]) <= tol) {
            continue;
        }
        std::swap(rows[r], rows[best]);
        for (size_t k = r + 1; k < rows.size(); k++) {
            complex f = rows[k][c] / rows[r][c];
            if (f == complex{0.0}) {
                continue;
            }
            for (size_t j = c; j < cols; j++) {
                rows[k][j] -= f * rows[r][j];
            }
        }
        r++;
    }
    return r;
}

double snap(double x, double tol) {
    if (std::abs(x) < tol) {
        return 0.0;
    }
    double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
}

}  // namespace gsc
