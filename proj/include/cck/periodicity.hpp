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

#include <cstdint>
#include <utility>
#include <vector>

#include "cck/matrix.hpp"

namespace cck {

/// Automorphism of G = Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_s (d_1 | d_2 | ...) preserving the
/// torsion subgroup: (x, y) ↦ (free·x, mixing·x + torsion·y), torsion rows taken mod d_i.
struct FgAbelianAutomorphism {
    IntMatrix free;                      ///< r × r, |det| = 1
    std::vector<Integer> torsion_orders; ///< d_i >= 2, each dividing the next
    IntMatrix torsion;                   ///< s × s
    IntMatrix mixing;                    ///< s × r

    FgAbelianAutomorphism() = default;
    /// Validates shapes, well-definedness and invertibility; reduces entries mod d_i.
    FgAbelianAutomorphism(IntMatrix free_block, std::vector<Integer> orders, IntMatrix torsion_block,
                          IntMatrix mixing_block);

    std::size_t free_rank() const { return free.rows(); }
    std::size_t torsion_count() const { return torsion_orders.size(); }

    static FgAbelianAutomorphism identity(std::size_t r, std::vector<Integer> orders);
    /// Free part only.
    static FgAbelianAutomorphism on_free(IntMatrix free_block);
};

/// (φ ∘ ψ)
FgAbelianAutomorphism compose(const FgAbelianAutomorphism& phi, const FgAbelianAutomorphism& psi);
FgAbelianAutomorphism power(const FgAbelianAutomorphism& phi, std::uint64_t e);
bool is_identity(const FgAbelianAutomorphism& phi);

/// Given B·A^k·B^-1 = A^sign (verified), the minimal m with A^m = I and gcd(m, k) = 1.
/// Any multiple of m prime to k also works.
std::uint64_t solve_prop_matrix(const IntMatrix& A, const IntMatrix& B, std::uint64_t k, int sign);

/// Multiplicative order of the torsion block acting on ⊕ Z/d_i.
std::uint64_t torsion_order(const FgAbelianAutomorphism& phi);

/// Given φ^m_free = id on the free quotient (verified), the minimal l with φ^l = id.
/// l divides m_free · s · e, with s the order on the torsion and e its exponent.
std::uint64_t full_order(const FgAbelianAutomorphism& phi, std::uint64_t m_free);

struct ConjugationWitness {
    IntMatrix B;
    int sign = 1;
};

struct PeriodResult {
    std::uint64_t m = 1;  ///< f_*^m = id on every H_j / T, gcd(m, k) = 1
    std::uint64_t l = 1;  ///< f_*^l = id on every H_j
    std::vector<std::uint64_t> m_per_degree, l_per_degree;
};

PeriodResult cor_period_driver(const std::vector<FgAbelianAutomorphism>& monodromy, std::uint64_t k,
                               const std::vector<ConjugationWitness>& witnesses);

}  // namespace cck
