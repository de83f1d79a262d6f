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

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cck/normal_forms.hpp"

namespace cck {

/// Finitely presented Z[t, t^-1]-module: the cokernel of a g × n relation
/// matrix whose columns are the relations.
struct ModulePresentation {
    std::size_t generators = 0;
    IntLaurentMatrix relations;

    ModulePresentation() = default;
    ModulePresentation(std::size_t g, IntLaurentMatrix rel);

    /// coker(f) on one generator.
    static ModulePresentation principal(const IntLaurent& f);
};

/// gcd of the g × g minors of the relation matrix in Z[t] (the order ideal
/// generator), as content · primitive with positive leading coefficient and
/// valuation 0. Zero when the rational cokernel has positive free rank.
IntLaurent order_ideal(const ModulePresentation& M);

/// Residue prime P: 0 stands for the zero ideal (κ = Q), otherwise a prime p (κ = F_p).
using ResidueCokernel = std::variant<CokernelStructure<RationalField>, CokernelStructure<PrimeField>>;

ResidueCokernel base_change_residue(const ModulePresentation& M, const Integer& P);

struct Property1Check {
    bool finite_dim = false;
    bool t_integral = false;
    bool tinv_integral = false;
    std::optional<std::size_t> dim;
    /// Monic characteristic polynomial of t over Q (only for P = 0 and finite_dim).
    std::optional<RatPoly> char_poly;
    /// First invariant factor with a non-integral eigenvalue of t, resp. t^-1.
    std::optional<RatPoly> t_offender, tinv_offender;
};

Property1Check property1_check(const ModulePresentation& M, const Integer& P);

/// A finite prime set S such that for p outside S the F_p-cokernel has the same
/// finite dimension as the Q-cokernel. nullopt when the Q-cokernel is not torsion.
std::optional<std::vector<Integer>> relevant_primes(const ModulePresentation& M);

enum class FailureKind { InfiniteDimension, NonIntegralT, NonIntegralTInverse };

std::string to_string(FailureKind kind);

struct FinGenWitness {
    Integer prime;  ///< 0 for P = 0
    FailureKind kind;
    RatPoly polynomial;  ///< offending invariant factor; zero for a free summand
};

struct FinGenVerdict {
    bool finitely_generated = false;
    std::optional<FinGenWitness> witness;
    std::optional<std::size_t> underlying_rank;
    std::vector<Integer> relevant_primes;
};

/// Decide whether M is finitely generated as an abelian group by checking the
/// residue criterion at P = 0 and at every relevant prime.
FinGenVerdict finitely_generated_over_Z(const ModulePresentation& M);

}  // namespace cck
