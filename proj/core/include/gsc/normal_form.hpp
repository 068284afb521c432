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

#include <vector>

#include "gsc/gf2.hpp"

namespace gsc {

/// A symplectic conjugator m and the conjugated matrix m c m^{-1}.
struct NormalFormResult {
    BitMatrix m;
    BitMatrix normalized;
};

/// Shared conjugator for a commuting set, with every conjugated element.
struct CommutingNormalFormResult {
    BitMatrix m;
    std::vector<BitMatrix> normalized;
};

/// True iff c is a 2n x 2n symplectic matrix with c^2 = I.
bool is_symplectic_involution(const BitMatrix &c);

/// Symplectic m with m c m^{-1} = (I E; 0 I), E symmetric.
///
/// Rank-normalizes E, clears the upper blocks of A, splits off the
/// (0 e; e^{-1} 0) part and recurses on the rest; the E = F = 0 case goes
/// through the Jordan form of A. A matrix already in the target form gets
/// m = I. Throws std::invalid_argument if c is not a symplectic involution.
NormalFormResult involution_normal_form(const BitMatrix &c);

/// One symplectic m with every m c_i m^{-1} = (A_i E_i; 0 A_i^T).
///
/// The first non-identity element drives each induction step. Throws
/// std::invalid_argument naming the offending index or pair when an element
/// is not a symplectic involution or two elements do not commute.
CommutingNormalFormResult commuting_set_normal_form(const std::vector<BitMatrix> &cs);

/// True iff (I + c1)(I + c2) != 0, which rules out conjugating both into
/// (I E; 0 I) with a single matrix.
bool simultaneous_nice_form_obstruction(const BitMatrix &c1, const BitMatrix &c2);

}  // namespace gsc
