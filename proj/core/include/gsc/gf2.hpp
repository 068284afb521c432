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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gsc {

/// Raised when an internal invariant that the mathematics guarantees is found
/// violated. Seeing one means a bug upstream, not bad user input.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Dense vector over GF(2), packed 64 coordinates per word. Coordinate 0 is
/// stored in the least significant bit of word 0.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t len);

    /// Parses a string of '0'/'1' characters; coordinate 0 is the first char.
    static BitVector from_string(std::string_view bits);
    /// Low `len` bits of `mask`, coordinate k = bit k.
    static BitVector from_mask(uint64_t mask, size_t len);
    static BitVector unit(size_t len, size_t k);

    size_t size() const {
        return len_;
    }
    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value);
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    bool is_zero() const;
    size_t weight() const;
    /// Coordinates 0..63 as a bitmask. Requires size() <= 64.
    uint64_t to_mask() const;

    /// Sub-vector [start, start + count).
    BitVector slice(size_t start, size_t count) const;
    static BitVector concat(const BitVector &top, const BitVector &bottom);

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    friend BitVector operator+(BitVector a, const BitVector &b) {
        a ^= b;
        return a;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        a &= b;
        return a;
    }

    /// Standard bilinear form a^T b over GF(2).
    bool dot(const BitVector &other) const;

    bool operator==(const BitVector &other) const = default;
    /// Lexicographic order with coordinate 0 most significant.
    bool operator<(const BitVector &other) const;

    std::string to_string() const;

    const std::vector<uint64_t> &words() const {
        return words_;
    }
    std::vector<uint64_t> &words() {
        return words_;
    }

   private:
    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense GF(2) matrix stored as packed rows. The shape is fixed at
/// construction; every arithmetic operation checks conformance.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    static BitMatrix zero(size_t rows, size_t cols) {
        return BitMatrix(rows, cols);
    }
    /// One string of '0'/'1' per row.
    static BitMatrix from_rows(const std::vector<std::string> &rows);
    static BitMatrix from_row_vectors(const std::vector<BitVector> &rows);
    static BitMatrix from_columns(const std::vector<BitVector> &columns);
    /// Assembles (tl tr; bl br). Blocks must tile a rectangle.
    static BitMatrix from_blocks(const BitMatrix &tl, const BitMatrix &tr, const BitMatrix &bl, const BitMatrix &br);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    bool get(size_t r, size_t c) const {
        return data_[r].get(c);
    }
    void set(size_t r, size_t c, bool value) {
        data_[r].set(c, value);
    }
    const BitVector &row(size_t r) const {
        return data_[r];
    }
    BitVector &row(size_t r) {
        return data_[r];
    }
    BitVector column(size_t c) const;

    BitMatrix block(size_t row0, size_t col0, size_t nrows, size_t ncols) const;
    void set_block(size_t row0, size_t col0, const BitMatrix &b);

    BitMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    bool is_symmetric() const;

    BitMatrix &operator+=(const BitMatrix &other);
    friend BitMatrix operator+(BitMatrix a, const BitMatrix &b) {
        a += b;
        return a;
    }
    friend BitMatrix operator*(const BitMatrix &a, const BitMatrix &b);
    friend BitVector operator*(const BitMatrix &a, const BitVector &v);

    bool operator==(const BitMatrix &other) const = default;

    std::string to_string() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BitVector> data_;
};

/// Row rank via Gaussian elimination.
size_t rank(const BitMatrix &m);

/// Inverse of a square full-rank matrix. Throws std::invalid_argument if the
/// matrix is singular or not square.
BitMatrix inverse(const BitMatrix &m);

/// Some x with m x = rhs, or nullopt if the system is inconsistent.
///
/// Free variables are set to zero after elimination that pivots from the last
/// column backwards, which makes the result the lexicographically least
/// solution (coordinate 0 most significant).
std::optional<BitVector> solve(const BitMatrix &m, const BitVector &rhs);

/// Basis of {x : m x = 0}, one vector per free column, in reduced form.
std::vector<BitVector> kernel_basis(const BitMatrix &m);

/// Basis of the column space of m, taken from the pivot columns of m.
std::vector<BitVector> column_space_basis(const BitMatrix &m);

/// Reduced row echelon form with leading ones scanned from column 0.
/// Zero rows are dropped.
BitMatrix rref(const BitMatrix &m);

/// Greedily extends `basis` (assumed independent) with vectors from
/// `candidates`, keeping only those that raise the rank.
std::vector<BitVector> extend_to_basis(std::vector<BitVector> basis, const std::vector<BitVector> &candidates);

/// The 2n x 2n block matrix J = (0 I; 0 0).
BitMatrix j_matrix(size_t n);
/// The symplectic form P = J + J^T = (0 I; I 0).
BitMatrix symplectic_form(size_t n);

/// Strictly lower triangular part.
BitMatrix lows(const BitMatrix &m);
/// Diagonal as a vector.
BitVector diag(const BitMatrix &m);
/// Outer product u v^T.
BitMatrix outer(const BitVector &u, const BitVector &v);

/// True iff C^T P C = P. Throws on odd or non-square shape.
bool is_symplectic(const BitMatrix &c);

/// x^T P y.
bool symplectic_product(const BitVector &x, const BitVector &y);

}  // namespace gsc
