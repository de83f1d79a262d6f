/*
   Copyright 2026 The cck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "cck/covers.hpp"
#include "support.hpp"

namespace cck::test {

inline IntChainComplex point_fiber() { return IntChainComplex({1}, {}); }

/// Wedge of two circles: C_1 = Z^2, C_0 = Z, ∂ = 0.
inline IntChainComplex wedge2_fiber() { return IntChainComplex({1, 2}, {IntMatrix(1, 2, 0)}); }

/// One 0-cell and one 1-cell with ∂ = 0.
inline IntChainComplex circle_fiber() { return IntChainComplex({1, 1}, {IntMatrix(1, 1, 0)}); }

inline TwistedChainComplex circle() { return mapping_torus_complex(point_fiber(), {int_identity(1)}); }

inline std::vector<IntMatrix> trefoil_monodromy() { return {int_identity(1), int_matrix({{1, -1}, {1, 0}})}; }

inline TwistedChainComplex trefoil_torus() { return mapping_torus_complex(wedge2_fiber(), trefoil_monodromy()); }

inline TwistedChainComplex klein_bottle() { return mapping_torus_complex(circle_fiber(), {int_identity(1), int_matrix({{-1}})}); }

inline TwistedChainComplex unipotent_torus() {
    return mapping_torus_complex(wedge2_fiber(), {int_identity(1), int_matrix({{1, 1}, {0, 1}})});
}

/// One 0-cell and one 1-cell with ∂ = (t - 1)^2: H_0(X_∞) = Λ/(t-1)^2 with a
/// unipotent Jordan block, whose covers outgrow the cell count in characteristic 2.
inline TwistedChainComplex jordan_line() {
    IntLaurentMatrix d(1, 1, IntLaurent());
    d(0, 0) = il(0, {1, -2, 1});
    return TwistedChainComplex({1, 1}, {d});
}

}  // namespace cck::test
