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
#include "gsc/random_circuits.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "gsc/clifford.hpp"
#include "gsc/pipeline.hpp"

namespace gsc {

namespace {

size_t pick(Rng &rng, size_t bound) {
    return std::uniform_int_distribution<size_t>(0, bound - 1)(rng);
}

std::vector<size_t> distinct_qubits(size_t n, size_t k, Rng &rng) {
    std::vector<size_t> out;
    while (out.size() < k) {
        size_t q = pick(rng, n);
        bool seen = false;
        for (size_t x : out) {
            seen = seen || x == q;
        }
        if (!seen) {
            out.push_back(q);
        }
    }
    return out;
}

void append_random(CircuitDescription &c, const std::vector<std::pair<std::string, size_t>> &menu, Rng &rng) {
    std::vector<std::pair<std::string, size_t>> allowed;
    for (const auto &entry : menu) {
        if (entry.second <= c.n) {
            allowed.push_back(entry);
        }
    }
    const auto &[name, arity] = allowed[pick(rng, allowed.size())];
    c.gates.push_back({name, distinct_qubits(c.n, arity, rng)});
}

BitMatrix random_matrix(size_t rows, size_t cols, Rng &rng) {
    BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

BitMatrix random_invertible(size_t n, Rng &rng) {
    while (true) {
        BitMatrix m = random_matrix(n, n, rng);
        if (rank(m) == n) {
            return m;
        }
    }
}

// S J S^{-1} where J has k lower 2x2 blocks (1 0; 1 1) and ones elsewhere on
// the diagonal.
BitMatrix random_involution(size_t n, Rng &rng) {
    size_t k = pick(rng, n / 2 + 1);
    BitMatrix j = BitMatrix::identity(n);
    for (size_t b = 0; b < k; b++) {
        j.set(2 * b + 1, 2 * b, true);
    }
    BitMatrix s = random_invertible(n, rng);
    return s * j * inverse(s);
}

// Uniform E among symmetric matrices with A E symmetric.
BitMatrix random_compatible_symmetric(const BitMatrix &a, Rng &rng) {
    size_t n = a.rows();
    std::vector<std::pair<size_t, size_t>> slots;
    for (size_t r = 0; r < n; r++) {
        for (size_t c = r; c < n; c++) {
            slots.push_back({r, c});
        }
    }
    auto symmetric_unit = [&](size_t i) {
        BitMatrix e(n, n);
        e.set(slots[i].first, slots[i].second, true);
        e.set(slots[i].second, slots[i].first, true);
        return e;
    };
    // Columns: the entries of A E + (A E)^T for each unit symmetric E.
    std::vector<BitVector> columns;
    for (size_t i = 0; i < slots.size(); i++) {
        BitMatrix ae = a * symmetric_unit(i);
        BitMatrix defect = ae + ae.transpose();
        BitVector col(n * n);
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < n; c++) {
                col.set(r * n + c, defect.get(r, c));
            }
        }
        columns.push_back(col);
    }
    BitMatrix e(n, n);
    for (const auto &k : kernel_basis(BitMatrix::from_columns(columns))) {
        if (rng() & 1) {
            for (size_t i = 0; i < slots.size(); i++) {
                if (k.get(i)) {
                    e += symmetric_unit(i);
                }
            }
        }
    }
    return e;
}

}  // namespace

CircuitDescription random_clifford_circuit(size_t n, size_t depth, Rng &rng) {
    static const std::vector<std::pair<std::string, size_t>> menu = {{"H", 1}, {"S", 1}, {"CX", 2}};
    CircuitDescription c{n, {}};
    for (size_t i = 0; i < depth; i++) {
        append_random(c, menu, rng);
    }
    return c;
}

CircuitDescription random_diagonal_c3_circuit(size_t n, size_t count, Rng &rng) {
    static const std::vector<std::pair<std::string, size_t>> menu = {
        {"T", 1}, {"TDG", 1}, {"S", 1}, {"Z", 1}, {"CZ", 2}, {"CS", 2}, {"CSDG", 2}, {"CCZ", 3}};
    CircuitDescription c{n, {}};
    for (size_t i = 0; i < count; i++) {
        append_random(c, menu, rng);
    }
    return c;
}

CircuitDescription random_c3_circuit(size_t n, Rng &rng) {
    CircuitDescription c = random_clifford_circuit(n, 1 + pick(rng, 20), rng);
    CircuitDescription d = random_diagonal_c3_circuit(n, 1 + pick(rng, 6), rng);
    CircuitDescription e = random_clifford_circuit(n, 1 + pick(rng, 20), rng);
    c.gates.insert(c.gates.end(), d.gates.begin(), d.gates.end());
    c.gates.insert(c.gates.end(), e.gates.begin(), e.gates.end());
    return c;
}

BlockRep random_block_rep(size_t n, Rng &rng) {
    if (n == 0 || n > 8) {
        throw std::invalid_argument("random_block_rep supports 1 to 8 qubits");
    }
    for (int attempt = 0; attempt < 1000; attempt++) {
        BitMatrix a = random_involution(n, rng);
        BitMatrix e = random_compatible_symmetric(a, rng);
        CliffordRep probe(BitMatrix::from_blocks(a, e, BitMatrix::zero(n, n), a.transpose()), BitVector(2 * n));
        // Q^2 = I at the rep level: (I + C^T) h = h-part of compose(probe, probe).
        BitVector target = compose(probe, probe).h();
        BitMatrix lhs = probe.c().transpose() + BitMatrix::identity(2 * n);
        auto h = solve(lhs, target);
        if (!h) {
            continue;
        }
        for (const auto &k : kernel_basis(lhs)) {
            if (rng() & 1) {
                *h ^= k;
            }
        }
        BlockRep out{a, e, h->slice(0, n), h->slice(n, n)};
        try {
            out.validate();
        } catch (const std::invalid_argument &) {
            continue;
        }
        return out;
    }
    throw invariant_error("random_block_rep: no admissible rep found");
}

std::pair<BlockRep, BlockRep> random_admissible_pair(size_t n, Rng &rng) {
    if (n == 0 || n > 4) {
        throw std::invalid_argument("random_admissible_pair supports 1 to 4 qubits");
    }
    GeneratorFamily family = normalize_family(generators_from_gate(circuit_unitary(random_c3_circuit(n, rng)))).first;
    auto product = [&] {
        CliffordRep q = CliffordRep::identity(n);
        for (const auto &g : family.qs) {
            if (rng() & 1) {
                q = compose(q, g);
            }
        }
        return BlockRep::from_rep(q);
    };
    BlockRep first = product();
    return {first, product()};
}

}  // namespace gsc
