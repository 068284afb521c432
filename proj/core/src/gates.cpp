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
#include "gsc/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gsc/dense_engine.hpp"

namespace gsc {

namespace {

struct GateSpec {
    std::string name;
    size_t arity;
};

const std::vector<GateSpec> &gate_specs() {
    static const std::vector<GateSpec> specs = {
        {"I", 1},  {"X", 1},  {"Y", 1},    {"Z", 1},   {"H", 1},     {"S", 1},  {"SDG", 1}, {"T", 1},
        {"TDG", 1}, {"CX", 2}, {"CZ", 2},  {"SWAP", 2}, {"CS", 2},   {"CSDG", 2}, {"CCZ", 3}, {"CSWAP", 3},
    };
    return specs;
}

DenseMatrix diagonal_gate(std::vector<complex> entries) {
    return DenseMatrix::diagonal(entries);
}

DenseMatrix permutation_gate(size_t k, const std::vector<size_t> &image) {
    DenseMatrix m(k);
    for (size_t col = 0; col < image.size(); col++) {
        m(image[col], col) = 1.0;
    }
    return m;
}

}  // namespace

const std::vector<std::string> &gate_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &s : gate_specs()) {
            out.push_back(s.name);
        }
        return out;
    }();
    return names;
}

size_t gate_arity(std::string_view name) {
    for (const auto &s : gate_specs()) {
        if (s.name == name) {
            return s.arity;
        }
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

DenseMatrix gate_matrix(std::string_view name) {
    const complex i{0, 1};
    const double r = 1.0 / std::sqrt(2.0);
    const complex t = std::polar(1.0, std::numbers::pi / 4);
    if (name == "I") {
        return DenseMatrix::identity(1);
    }
    if (name == "X") {
        return DenseMatrix::from_entries({0, 1, 1, 0});
    }
    if (name == "Y") {
        return DenseMatrix::from_entries({0, -i, i, 0});
    }
    if (name == "Z") {
        return diagonal_gate({1, -1});
    }
    if (name == "H") {
        return DenseMatrix::from_entries({r, r, r, -r});
    }
    if (name == "S") {
        return diagonal_gate({1, i});
    }
    if (name == "SDG") {
        return diagonal_gate({1, -i});
    }
    if (name == "T") {
        return diagonal_gate({1, t});
    }
    if (name == "TDG") {
        return diagonal_gate({1, std::conj(t)});
    }
    if (name == "CX") {
        return permutation_gate(2, {0, 1, 3, 2});
    }
    if (name == "CZ") {
        return diagonal_gate({1, 1, 1, -1});
    }
    if (name == "SWAP") {
        return permutation_gate(2, {0, 2, 1, 3});
    }
    if (name == "CS") {
        return diagonal_gate({1, 1, 1, i});
    }
    if (name == "CSDG") {
        return diagonal_gate({1, 1, 1, -i});
    }
    if (name == "CCZ") {
        return diagonal_gate({1, 1, 1, 1, 1, 1, 1, -1});
    }
    if (name == "CSWAP") {
        return permutation_gate(3, {0, 1, 2, 3, 4, 6, 5, 7});
    }
    throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
}

DenseMatrix gate_on(std::string_view name, std::span<const size_t> qubits, size_t n) {
    if (qubits.size() != gate_arity(name)) {
        throw std::invalid_argument("gate '" + std::string(name) + "' expects " + std::to_string(gate_arity(name)) +
                                    " qubits");
    }
    return embed_gate(gate_matrix(name), qubits, n);
}

CliffordRep standard_gate(std::string_view name, std::span<const size_t> qubits, size_t n) {
    auto rep = extract_rep(gate_on(name, qubits, n));
    if (!rep) {
        throw std::invalid_argument("gate '" + std::string(name) + "' is not a Clifford gate");
    }
    return *rep;
}

}  // namespace gsc
