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
#include "gsc/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gsc/gates.hpp"

namespace gsc {

namespace {

struct Line {
    size_t number;
    std::vector<std::string> tokens;
};

/// Non-empty lines with comments removed, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    size_t number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        number++;
        std::string_view raw = text.substr(pos, end - pos);
        raw = raw.substr(0, raw.find('#'));
        std::istringstream in{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; in >> tok;) {
            line.tokens.push_back(tok);
        }
        if (!line.tokens.empty()) {
            out.push_back(std::move(line));
        }
        pos = end + 1;
    }
    return out;
}

[[noreturn]] void fail(size_t line, const std::string &msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

size_t parse_count(const std::string &tok, size_t line, const char *what) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        fail(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    return value;
}

}  // namespace

CircuitDescription parse_circuit(std::string_view text) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError("circuit is empty");
    }
    const Line &header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[0] != "qubits") {
        fail(header.number, "expected 'qubits N'");
    }
    CircuitDescription circuit;
    circuit.n = parse_count(header.tokens[1], header.number, "a qubit count");
    if (circuit.n == 0 || circuit.n > kMaxDenseQubits) {
        fail(header.number, "qubit count must lie in [1, " + std::to_string(kMaxDenseQubits) + "]");
    }
    for (size_t i = 1; i < lines.size(); i++) {
        const Line &line = lines[i];
        GateApplication gate;
        gate.name = line.tokens[0];
        std::transform(gate.name.begin(), gate.name.end(), gate.name.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
        size_t arity = 0;
        try {
            arity = gate_arity(gate.name);
        } catch (const std::invalid_argument &) {
            fail(line.number, "unknown gate '" + line.tokens[0] + "'");
        }
        if (line.tokens.size() - 1 != arity) {
            fail(line.number, gate.name + " takes " + std::to_string(arity) + " qubit(s), got " +
                                  std::to_string(line.tokens.size() - 1));
        }
        for (size_t k = 1; k < line.tokens.size(); k++) {
            size_t q = parse_count(line.tokens[k], line.number, "a qubit index");
            if (q >= circuit.n) {
                fail(line.number, "qubit " + std::to_string(q) + " out of range for " + std::to_string(circuit.n) +
                                      " qubits");
            }
            if (std::find(gate.qubits.begin(), gate.qubits.end(), q) != gate.qubits.end()) {
                fail(line.number, "repeated qubit " + std::to_string(q));
            }
            gate.qubits.push_back(q);
        }
        circuit.gates.push_back(std::move(gate));
    }
    return circuit;
}

std::string format_circuit(const CircuitDescription &circuit) {
    std::string out = "qubits " + std::to_string(circuit.n) + "\n";
    for (const auto &g : circuit.gates) {
        out += g.name;
        for (size_t q : g.qubits) {
            out += " " + std::to_string(q);
        }
        out += "\n";
    }
    return out;
}

DenseMatrix circuit_unitary(const CircuitDescription &circuit) {
    DenseMatrix u = DenseMatrix::identity(circuit.n);
    for (const auto &g : circuit.gates) {
        apply_gate(u, gate_matrix(g.name), g.qubits);
    }
    return u;
}

std::vector<BitMatrix> parse_bit_matrices(std::string_view text) {
    std::vector<Line> lines = tokenize(text);
    std::vector<BitMatrix> out;
    size_t i = 0;
    while (i < lines.size()) {
        const Line &header = lines[i];
        if (header.tokens.size() != 2) {
            fail(header.number, "expected 'rows cols'");
        }
        size_t rows = parse_count(header.tokens[0], header.number, "a row count");
        size_t cols = parse_count(header.tokens[1], header.number, "a column count");
        if (rows == 0 || cols == 0) {
            fail(header.number, "matrix dimensions must be positive");
        }
        BitMatrix m(rows, cols);
        for (size_t r = 0; r < rows; r++) {
            if (++i >= lines.size()) {
                fail(header.number, "matrix ends after " + std::to_string(r) + " of " + std::to_string(rows) + " rows");
            }
            const Line &row = lines[i];
            std::string bits;
            for (const auto &tok : row.tokens) {
                bits += tok;
            }
            if (bits.size() != cols || bits.find_first_not_of("01") != std::string::npos) {
                fail(row.number, "expected " + std::to_string(cols) + " binary digits");
            }
            m.row(r) = BitVector::from_string(bits);
        }
        out.push_back(std::move(m));
        i++;
    }
    if (out.empty()) {
        throw ParseError("no matrices found");
    }
    return out;
}

std::string format_bit_matrix(const BitMatrix &m) {
    return std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n" + m.to_string();
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace gsc
