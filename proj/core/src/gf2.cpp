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

#include "gsc/gf2.hpp"

#include <bit>
#include <utility>

namespace gsc {

namespace {

size_t words_for(size_t len) {
    return (len + 63) / 64;
}

void require(bool ok, const char *what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(size_t len) : len_(len), words_(words_for(len), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            v.flip(k);
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVector BitVector::from_mask(uint64_t mask, size_t len) {
    require(len <= 64, "from_mask supports at most 64 coordinates");
    BitVector v(len);
    if (len > 0) {
        v.words_[0] = len == 64 ? mask : (mask & ((uint64_t{1} << len) - 1));
    }
    return v;
}

BitVector BitVector::unit(size_t len, size_t k) {
    BitVector v(len);
    v.flip(k);
    return v;
}

void BitVector::set(size_t k, bool value) {
    uint64_t bit = uint64_t{1} << (k & 63);
    if (value) {
        words_[k >> 6] |= bit;
    } else {
        words_[k >> 6] &= ~bit;
    }
}

bool BitVector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVector::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

uint64_t BitVector::to_mask() const {
    require(len_ <= 64, "to_mask supports at most 64 coordinates");
    return words_.empty() ? 0 : words_[0];
}

BitVector BitVector::slice(size_t start, size_t count) const {
    require(start + count <= len_, "slice out of range");
    BitVector out(count);
    for (size_t k = 0; k < count; k++) {
        if (get(start + k)) {
            out.flip(k);
        }
    }
    return out;
}

BitVector BitVector::concat(const BitVector &top, const BitVector &bottom) {
    BitVector out(top.size() + bottom.size());
    for (size_t k = 0; k < top.size(); k++) {
        if (top.get(k)) {
            out.flip(k);
        }
    }
    for (size_t k = 0; k < bottom.size(); k++) {
        if (bottom.get(k)) {
            out.flip(top.size() + k);
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require(len_ == other.len_, "vector length mismatch");
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require(len_ == other.len_, "vector length mismatch");
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

bool BitVector::dot(const BitVector &other) const {
    require(len_ == other.len_, "vector length mismatch");
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

bool BitVector::operator<(const BitVector &other) const {
    if (len_ != other.len_) {
        return len_ < other.len_;
    }
    for (size_t k = 0; k < len_; k++) {
        bool a = get(k);
        bool b = other.get(k);
        if (a != b) {
            return b;
        }
    }
    return false;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (size_t k = 0; k < len_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    std::vector<BitVector> vs;
    vs.reserve(rows.size());
    for (const auto &r : rows) {
        vs.push_back(BitVector::from_string(r));
    }
    return from_row_vectors(vs);
}

BitMatrix BitMatrix::from_row_vectors(const std::vector<BitVector> &rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        require(rows[r].size() == cols, "ragged rows");
        m.data_[r] = rows[r];
    }
    return m;
}

BitMatrix BitMatrix::from_columns(const std::vector<BitVector> &columns) {
    size_t rows = columns.empty() ? 0 : columns.front().size();
    BitMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        require(columns[c].size() == rows, "ragged columns");
        for (size_t r = 0; r < rows; r++) {
            if (columns[c].get(r)) {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::from_blocks(const BitMatrix &tl, const BitMatrix &tr, const BitMatrix &bl, const BitMatrix &br) {
    require(tl.rows() == tr.rows() && bl.rows() == br.rows(), "block rows do not tile");
    require(tl.cols() == bl.cols() && tr.cols() == br.cols(), "block columns do not tile");
    BitMatrix m(tl.rows() + bl.rows(), tl.cols() + tr.cols());
    m.set_block(0, 0, tl);
    m.set_block(0, tl.cols(), tr);
    m.set_block(tl.rows(), 0, bl);
    m.set_block(tl.rows(), tl.cols(), br);
    return m;
}

BitVector BitMatrix::column(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.flip(r);
        }
    }
    return v;
}

BitMatrix BitMatrix::block(size_t row0, size_t col0, size_t nrows, size_t ncols) const {
    require(row0 + nrows <= rows_ && col0 + ncols <= cols_, "block out of range");
    BitMatrix out(nrows, ncols);
    for (size_t r = 0; r < nrows; r++) {
        out.data_[r] = data_[row0 + r].slice(col0, ncols);
    }
    return out;
}

void BitMatrix::set_block(size_t row0, size_t col0, const BitMatrix &b) {
    require(row0 + b.rows() <= rows_ && col0 + b.cols() <= cols_, "block out of range");
    for (size_t r = 0; r < b.rows(); r++) {
        for (size_t c = 0; c < b.cols(); c++) {
            set(row0 + r, col0 + c, b.get(r, c));
        }
    }
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool BitMatrix::is_zero() const {
    for (const auto &r : data_) {
        if (!r.is_zero()) {
            return false;
        }
    }
    return true;
}

bool BitMatrix::is_identity() const {
    return is_square() && *this == identity(rows_);
}

bool BitMatrix::is_symmetric() const {
    return is_square() && *this == transpose();
}

BitMatrix &BitMatrix::operator+=(const BitMatrix &other) {
    require(rows_ == other.rows_ && cols_ == other.cols_, "matrix sum dimension mismatch");
    for (size_t r = 0; r < rows_; r++) {
        data_[r] ^= other.data_[r];
    }
    return *this;
}

BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
    require(a.cols_ == b.rows_, "matrix product dimension mismatch");
    BitMatrix out(a.rows_, b.cols_);
    for (size_t r = 0; r < a.rows_; r++) {
        const BitVector &arow = a.data_[r];
        BitVector &orow = out.data_[r];
        for (size_t k = 0; k < a.cols_; k++) {
            if (arow.get(k)) {
                orow ^= b.data_[k];
            }
        }
    }
    return out;
}

BitVector operator*(const BitMatrix &a, const BitVector &v) {
    require(a.cols_ == v.size(), "matrix-vector dimension mismatch");
    BitVector out(a.rows_);
    for (size_t r = 0; r < a.rows_; r++) {
        if (a.data_[r].dot(v)) {
            out.flip(r);
        }
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto &r : data_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

/// Row-reduces `rows` in place (fully reduced), scanning the given column
/// order. Returns the pivot column of each pivot row; pivot rows are moved to
/// the front. `rhs`, if non-null, is permuted and reduced alongside.
std::vector<size_t> reduce(std::vector<BitVector> &rows, const std::vector<size_t> &column_order, std::vector<bool> *rhs) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c : column_order) {
        if (next == rows.size()) {
            break;
        }
        size_t found = next;
        while (found < rows.size() && !rows[found].get(c)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        if (rhs) {
            std::vector<bool>::swap((*rhs)[next], (*rhs)[found]);
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
                if (rhs && (*rhs)[next]) {
                    (*rhs)[r] = !(*rhs)[r];
                }
            }
        }
        pivots.push_back(c);
        next++;
    }
    return pivots;
}

std::vector<size_t> forward_order(size_t n) {
    std::vector<size_t> order(n);
    for (size_t k = 0; k < n; k++) {
        order[k] = k;
    }
    return order;
}

std::vector<BitVector> rows_of(const BitMatrix &m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        rows.push_back(m.row(r));
    }
    return rows;
}

}  // namespace

size_t rank(const BitMatrix &m) {
    auto rows = rows_of(m);
    return reduce(rows, forward_order(m.cols()), nullptr).size();
}

BitMatrix rref(const BitMatrix &m) {
    auto rows = rows_of(m);
    auto pivots = reduce(rows, forward_order(m.cols()), nullptr);
    rows.resize(pivots.size());
    if (rows.empty()) {
        return BitMatrix(0, m.cols());
    }
    return BitMatrix::from_row_vectors(rows);
}

BitMatrix inverse(const BitMatrix &m) {
    require(m.is_square(), "inverse of a non-square matrix");
    size_t n = m.rows();
    std::vector<BitVector> rows;
    rows.reserve(n);
    for (size_t r = 0; r < n; r++) {
        rows.push_back(BitVector::concat(m.row(r), BitVector::unit(n, r)));
    }
    auto pivots = reduce(rows, forward_order(n), nullptr);
    if (pivots.size() != n) {
        throw std::invalid_argument("inverse of a singular matrix");
    }
    BitMatrix out(n, n);
    for (size_t r = 0; r < n; r++) {
        out.row(r) = rows[r].slice(n, n);
    }
    return out;
}

std::optional<BitVector> solve(const BitMatrix &m, const BitVector &rhs) {
    require(m.rows() == rhs.size(), "solve: right-hand side length mismatch");
    auto rows = rows_of(m);
    std::vector<bool> b(rhs.size());
    for (size_t k = 0; k < rhs.size(); k++) {
        b[k] = rhs.get(k);
    }
    std::vector<size_t> order(m.cols());
    for (size_t k = 0; k < m.cols(); k++) {
        order[k] = m.cols() - 1 - k;
    }
    auto pivots = reduce(rows, order, &b);
    for (size_t r = pivots.size(); r < rows.size(); r++) {
        if (b[r]) {
            return std::nullopt;
        }
    }
    BitVector x(m.cols());
    for (size_t r = 0; r < pivots.size(); r++) {
        x.set(pivots[r], b[r]);
    }
    return x;
}

std::vector<BitVector> kernel_basis(const BitMatrix &m) {
    auto rows = rows_of(m);
    auto pivots = reduce(rows, forward_order(m.cols()), nullptr);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector x = BitVector::unit(m.cols(), f);
        for (size_t r = 0; r < pivots.size(); r++) {
            if (rows[r].get(f)) {
                x.flip(pivots[r]);
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<BitVector> column_space_basis(const BitMatrix &m) {
    auto rows = rows_of(m);
    auto pivots = reduce(rows, forward_order(m.cols()), nullptr);
    std::vector<BitVector> basis;
    basis.reserve(pivots.size());
    for (size_t p : pivots) {
        basis.push_back(m.column(p));
    }
    return basis;
}

std::vector<BitVector> extend_to_basis(std::vector<BitVector> basis, const std::vector<BitVector> &candidates) {
    // Echelon copies of the accepted vectors, each tagged with its lowest set
    // coordinate. Reducing in insertion order is sound because every stored
    // vector was itself reduced against all earlier ones.
    std::vector<std::pair<size_t, BitVector>> echelon;
    auto reduce_one = [&](BitVector v) {
        for (const auto &[pivot, r] : echelon) {
            if (v.get(pivot)) {
                v ^= r;
            }
        }
        return v;
    };
    auto lowest = [](const BitVector &v) {
        for (size_t k = 0; k < v.size(); k++) {
            if (v.get(k)) {
                return k;
            }
        }
        return v.size();
    };
    for (const auto &b : basis) {
        BitVector r = reduce_one(b);
        if (r.is_zero()) {
            throw std::invalid_argument("extend_to_basis: initial vectors are dependent");
        }
        echelon.emplace_back(lowest(r), std::move(r));
    }
    for (const auto &c : candidates) {
        BitVector r = reduce_one(c);
        if (!r.is_zero()) {
            echelon.emplace_back(lowest(r), std::move(r));
            basis.push_back(c);
        }
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Symplectic utilities

BitMatrix j_matrix(size_t n) {
    BitMatrix j(2 * n, 2 * n);
    for (size_t k = 0; k < n; k++) {
        j.set(k, n + k, true);
    }
    return j;
}

BitMatrix symplectic_form(size_t n) {
    BitMatrix p(2 * n, 2 * n);
    for (size_t k = 0; k < n; k++) {
        p.set(k, n + k, true);
        p.set(n + k, k, true);
    }
    return p;
}

BitMatrix lows(const BitMatrix &m) {
    BitMatrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < r && c < m.cols(); c++) {
            if (m.get(r, c)) {
                out.set(r, c, true);
            }
        }
    }
    return out;
}

BitVector diag(const BitMatrix &m) {
    require(m.is_square(), "diag of a non-square matrix");
    BitVector v(m.rows());
    for (size_t k = 0; k < m.rows(); k++) {
        if (m.get(k, k)) {
            v.flip(k);
        }
    }
    return v;
}

BitMatrix outer(const BitVector &u, const BitVector &v) {
    BitMatrix m(u.size(), v.size());
    for (size_t r = 0; r < u.size(); r++) {
        if (u.get(r)) {
            m.row(r) = v;
        }
    }
    return m;
}

bool is_symplectic(const BitMatrix &c) {
    if (!c.is_square() || c.rows() % 2 != 0) {
        throw std::invalid_argument("is_symplectic expects a square matrix of even size");
    }
    BitMatrix p = symplectic_form(c.rows() / 2);
    return c.transpose() * p * c == p;
}

bool symplectic_product(const BitVector &x, const BitVector &y) {
    require(x.size() == y.size() && x.size() % 2 == 0, "symplectic product needs equal even lengths");
    size_t n = x.size() / 2;
    bool acc = false;
    for (size_t k = 0; k < n; k++) {
        acc ^= (x.get(k) && y.get(n + k)) != (x.get(n + k) && y.get(k));
    }
    return acc;
}

}  // namespace gsc
