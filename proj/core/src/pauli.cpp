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

#include "gsc/pauli.hpp"

#include <stdexcept>

namespace gsc {

namespace {

void require_same_n(const PhasedPauli &p, const PhasedPauli &q) {
    if (p.a.size() != q.a.size()) {
        throw std::invalid_argument("Pauli operands act on different qubit counts");
    }
}

}  // namespace

size_t basis_index(const BitVector &x) {
    size_t n = x.size();
    size_t idx = 0;
    for (size_t q = 0; q < n; q++) {
        if (x.get(q)) {
            idx |= size_t{1} << (n - 1 - q);
        }
    }
    return idx;
}

BitVector basis_label(size_t idx, size_t n) {
    BitVector x(n);
    for (size_t q = 0; q < n; q++) {
        x.set(q, (idx >> (n - 1 - q)) & 1);
    }
    return x;
}

complex i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

PhasedPauli pauli_mul(const PhasedPauli &p, const PhasedPauli &q) {
    require_same_n(p, q);
    bool cross = q.z_part().dot(p.x_part());
    return PhasedPauli(p.delta ^ q.delta, p.epsilon ^ q.epsilon ^ (p.delta && q.delta) ^ cross, p.a + q.a);
}

bool commutes(const PhasedPauli &p, const PhasedPauli &q) {
    require_same_n(p, q);
    return !symplectic_product(p.a, q.a);
}

BasisImage pauli_apply_basis(const PhasedPauli &p, const BitVector &x) {
    if (x.size() != p.num_qubits()) {
        throw std::invalid_argument("basis label length does not match the Pauli");
    }
    BitVector y = x + p.x_part();
    bool sign = p.epsilon ^ p.z_part().dot(y);
    return {static_cast<uint8_t>(p.delta + 2 * sign), std::move(y)};
}

DenseMatrix pauli_to_dense(const PhasedPauli &p) {
    size_t n = p.num_qubits();
    DenseMatrix m(n);
    for (size_t col = 0; col < m.dim(); col++) {
        auto img = pauli_apply_basis(p, basis_label(col, n));
        m(basis_index(img.label), col) = i_pow(img.log_i);
    }
    return m;
}

std::string PhasedPauli::to_string() const {
    std::string out = epsilon ? "-" : "+";
    if (delta) {
        out += "i";
    }
    out += "tau[" + z_part().to_string() + "|" + x_part().to_string() + "]";
    return out;
}

PhasedPauli PhasedPauli::parse(std::string_view text) {
    auto fail = [&]() -> PhasedPauli {
        throw std::invalid_argument("cannot parse Pauli '" + std::string(text) + "'");
    };
    PhasedPauli p;
    std::string_view s = text;
    if (s.empty() || (s[0] != '+' && s[0] != '-')) {
        return fail();
    }
    p.epsilon = s[0] == '-';
    s.remove_prefix(1);
    if (!s.empty() && s[0] == 'i') {
        p.delta = true;
        s.remove_prefix(1);
    }
    if (s.substr(0, 4) != "tau[" || s.back() != ']') {
        return fail();
    }
    s = s.substr(4, s.size() - 5);
    size_t bar = s.find('|');
    if (bar == std::string_view::npos || bar * 2 + 1 != s.size()) {
        return fail();
    }
    p.a = BitVector::concat(BitVector::from_string(s.substr(0, bar)), BitVector::from_string(s.substr(bar + 1)));
    return p;
}

}  // namespace gsc
