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
#include "gsc/clifford.hpp"

#include <stdexcept>

namespace gsc {

namespace {

void require_same_n(const CliffordRep &a, const CliffordRep &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Clifford operands act on different qubit counts");
    }
}

}  // namespace

CliffordRep::CliffordRep(BitMatrix c, BitVector h) : c_(std::move(c)), h_(std::move(h)) {
    if (!is_symplectic(c_)) {
        throw std::invalid_argument("Clifford C-matrix is not symplectic");
    }
    if (h_.size() != c_.rows()) {
        throw std::invalid_argument("Clifford h-vector length does not match C");
    }
}

CliffordRep CliffordRep::identity(size_t n) {
    return CliffordRep(BitMatrix::identity(2 * n), BitVector(2 * n));
}

std::string CliffordRep::to_string() const {
    return "C=\n" + c_.to_string() + "h=" + h_.to_string();
}

BitVector d_vector(const CliffordRep &rep) {
    const BitMatrix &c = rep.c();
    return diag(c.transpose() * j_matrix(rep.num_qubits()) * c);
}

BitMatrix sign_form(const CliffordRep &rep) {
    const BitMatrix &c = rep.c();
    BitVector d = d_vector(rep);
    return lows(c.transpose() * j_matrix(rep.num_qubits()) * c + outer(d, d));
}

PhasedPauli conjugate(const CliffordRep &rep, const PhasedPauli &p) {
    if (p.a.size() != rep.c().rows()) {
        throw std::invalid_argument("Pauli and Clifford act on different qubit counts");
    }
    BitVector d = d_vector(rep);
    bool da = d.dot(p.a);
    bool eps = p.epsilon ^ rep.h().dot(p.a) ^ p.a.dot(sign_form(rep) * p.a) ^ (p.delta && da);
    return PhasedPauli(p.delta ^ da, eps, rep.c() * p.a);
}

CliffordRep compose(const CliffordRep &outer, const CliffordRep &inner) {
    require_same_n(outer, inner);
    const BitMatrix &c1 = inner.c();
    const BitMatrix &c2 = outer.c();
    BitMatrix c1t = c1.transpose();
    BitVector d1 = d_vector(inner);
    BitVector d2 = d_vector(outer);
    BitVector h = inner.h() + c1t * outer.h() + diag(c1t * sign_form(outer) * c1 + gsc::outer(d1, d2) * c1);
    return CliffordRep(c2 * c1, std::move(h));
}

CliffordRep inverse(const CliffordRep &rep) {
    BitMatrix ci = gsc::inverse(rep.c());
    BitMatrix cit = ci.transpose();
    BitVector d = d_vector(rep);
    BitVector di = diag(cit * j_matrix(rep.num_qubits()) * ci);
    BitVector h = cit * rep.h() + diag(cit * sign_form(rep) * ci + outer(di, d) * ci);
    return CliffordRep(std::move(ci), std::move(h));
}

CliffordRep from_pauli(const PhasedPauli &p) {
    size_t n = p.num_qubits();
    return CliffordRep(BitMatrix::identity(2 * n), symplectic_form(n) * p.a);
}

}  // namespace gsc
