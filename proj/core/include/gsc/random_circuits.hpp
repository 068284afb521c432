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

#include <random>
#include <utility>

#include "gsc/circuit_io.hpp"
#include "gsc/dense_engine.hpp"

namespace gsc {

using Rng = std::mt19937_64;

/// Uniformly chosen H, S and (for n >= 2) CX gates.
CircuitDescription random_clifford_circuit(size_t n, size_t depth, Rng &rng);

/// Products of T, TDG, S, Z and, for n >= 2, CZ, CS, CSDG; CCZ for n >= 3.
/// Every such product lies in C_3.
CircuitDescription random_diagonal_c3_circuit(size_t n, size_t count, Rng &rng);

/// Clifford, then diagonal C_3, then Clifford; a C_3 gate by construction.
CircuitDescription random_c3_circuit(size_t n, Rng &rng);

/// A block-form rep that passes BlockRep::validate: A a random conjugate of a
/// Jordan-type involution, E uniform among compatible symmetric matrices, h a
/// random solution of the h-condition.
BlockRep random_block_rep(size_t n, Rng &rng);

/// Two block-form reps that commute at the rep level: products Q_x, Q_y of the
/// normalized generator family of a random C_3 gate, for random x, y.
std::pair<BlockRep, BlockRep> random_admissible_pair(size_t n, Rng &rng);

}  // namespace gsc
