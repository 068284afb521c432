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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/clifford.hpp"
#include "gsc/dense_matrix.hpp"

namespace gsc {

/// Names accepted by gate_matrix, in a fixed order.
const std::vector<std::string> &gate_names();

/// Number of qubits the named gate acts on. Throws std::invalid_argument for
/// unknown names.
size_t gate_arity(std::string_view name);

/// The gate's own 2^k x 2^k matrix. Control qubits come first: CX = |c t> ->
/// |c, t + c>, CSWAP swaps its second and third qubits when the first is set.
DenseMatrix gate_matrix(std::string_view name);

/// The gate embedded into n qubits.
DenseMatrix gate_on(std::string_view name, std::span<const size_t> qubits, size_t n);

/// (C, h) of a Clifford library gate, extracted from its dense matrix.
/// Throws std::invalid_argument for unknown names, bad indices or
/// non-Clifford gates.
CliffordRep standard_gate(std::string_view name, std::span<const size_t> qubits, size_t n);

}  // namespace gsc
