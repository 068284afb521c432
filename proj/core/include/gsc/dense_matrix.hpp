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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gsc {

using complex = std::complex<double>;

/// Absolute entrywise tolerance used by every membership and equality check.
inline constexpr double kTolerance = 1e-9;

/// Largest qubit count the dense engine will materialize.
inline constexpr size_t kMaxDenseQubits = 10;

/// Square complex matrix of dimension 2^n, row-major.
///
/// Basis label x in Z_2^n indexes the computational basis with qubit 0 as the
/// most significant bit: index(x) = sum_q x_q 2^{n-1-q}.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    /// Zero matrix of dimension 2^num_qubits.
    explicit DenseMatrix(size_t num_qubits);

    static DenseMatrix identity(size_t num_qubits);
    /// Diagonal matrix; the entry count must be a power of two.
    static DenseMatrix diagonal(std::span<const complex> entries);
    /// Wraps row-major entries; throws if the count is not 4^n.
    static DenseMatrix from_entries(std::vector<complex> entries);

    size_t num_qubits() const {
        return n_;
    }
    size_t dim() const {
        return dim_;
    }
    complex &operator()(size_t r, size_t c) {
        return data_[r * dim_ + c];
    }
    const complex &operator()(size_t r, size_t c) const {
        return data_[r * dim_ + c];
    }
    const std::vector<complex> &entries() const {
        return data_;
    }

    DenseMatrix adjoint() const;
    complex trace() const;
    double max_abs() const;

    DenseMatrix &operator+=(const DenseMatrix &other);
    DenseMatrix &operator-=(const DenseMatrix &other);
    DenseMatrix &operator*=(complex s);
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) {
        a += b;
        return a;
    }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) {
        a -= b;
        return a;
    }
    friend DenseMatrix operator*(complex s, DenseMatrix a) {
        a *= s;
        return a;
    }
    /// Plain cubic product; zero entries of the left factor are skipped, which
    /// makes products of monomial matrices quadratic.
    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);

    std::vector<complex> apply(std::span<const complex> v) const;

    bool is_unitary(double tol = kTolerance) const;
    bool is_diagonal(double tol = kTolerance) const;
    bool approx_equal(const DenseMatrix &other, double tol = kTolerance) const;
    /// Some unit-modulus c with this = c * other, if one exists.
    std::optional<complex> phase_relative_to(const DenseMatrix &other, double tol = kTolerance) const;
    bool equal_up_to_phase(const DenseMatrix &other, double tol = kTolerance) const {
        return phase_relative_to(other, tol).has_value();
    }

   private:
    size_t n_ = 0;
    size_t dim_ = 1;
    std::vector<complex> data_{complex{0.0}};
};

/// u m u^dagger.
DenseMatrix conjugate_by(const DenseMatrix &u, const DenseMatrix &m);

/// Tensor product a (x) b; a acts on the leading qubits.
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);

/// Left-multiplies `u` in place by the k-qubit `gate` acting on `qubits`
/// (gate qubit 0 = qubits[0], most significant within the gate).
void apply_gate(DenseMatrix &u, const DenseMatrix &gate, std::span<const size_t> qubits);

/// Embeds a k-qubit gate into n qubits.
DenseMatrix embed_gate(const DenseMatrix &gate, std::span<const size_t> qubits, size_t n);

/// Numerical rank by Gaussian elimination with partial pivoting.
size_t numerical_rank(std::vector<std::vector<complex>> rows, double tol = kTolerance);

/// Zeroes |x| < tol and rounds to 12 decimal places so reports print
/// identically across runs.
double snap(double x, double tol = 1e-12);

}  // namespace gsc
