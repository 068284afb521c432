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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/dense_matrix.hpp"
#include "gsc/gf2.hpp"

namespace gsc {

/// Parse failure; what() starts with "line N:" when a line is at fault.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GateApplication {
    std::string name;
    std::vector<size_t> qubits;
};

/// Gates in time order: the first gate acts first.
struct CircuitDescription {
    size_t n = 0;
    std::vector<GateApplication> gates;
};

/// Text format: "#" starts a comment, blank lines are skipped, the first
/// remaining line is "qubits N" and every further line is "NAME q0 [q1 [q2]]".
CircuitDescription parse_circuit(std::string_view text);

/// Renders a circuit in the format parse_circuit reads.
std::string format_circuit(const CircuitDescription &circuit);

/// G_k ... G_1 for gates G_1..G_k in file order.
DenseMatrix circuit_unitary(const CircuitDescription &circuit);

/// One or more blocks, each "rows cols" followed by that many rows of 0/1
/// characters. Comments and blank lines as in the circuit format.
std::vector<BitMatrix> parse_bit_matrices(std::string_view text);

std::string format_bit_matrix(const BitMatrix &m);

/// Whole file as a string; throws ParseError if it cannot be read.
std::string read_text_file(const std::filesystem::path &path);

}  // namespace gsc
