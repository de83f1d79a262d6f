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

#include "cck/normal_forms.hpp"

namespace cck {

std::size_t cyclotomic_index_bound(std::size_t d) {
    std::size_t best = 1;
    for (std::size_t n = 1; n <= 2 * d * d + 2; ++n)
        if (euler_phi(n) <= d) best = n;
    return best;
}

std::optional<std::uint64_t> finite_order(const IntMatrix& A) {
    IntegerRing Z;
    if (!A.is_square()) throw precondition_error("finite_order of a non-square matrix");
    if (abs(determinant(Z, A)) != 1) throw precondition_error("finite_order needs |det A| = 1");
    const std::size_t n = A.rows();
    if (n == 0) return 1;

    // The minimal polynomial divides the characteristic polynomial, so a
    // finite-order matrix has a characteristic polynomial that is a product of
    // cyclotomic factors. Peel them off; the lcm of their indices is the only
    // candidate order.
    IntPoly chi = char_poly(Z, A);
    std::uint64_t candidate = 1;
    const std::size_t bound = cyclotomic_index_bound(n);
    for (std::size_t k = 1; k <= bound && chi.degree() > 0; ++k) {
        if (euler_phi(k) > static_cast<std::uint64_t>(chi.degree())) continue;
        const IntPoly phi = cyclotomic(k);
        bool used = false;
        for (;;) {
            RationalField Q;
            auto [q, r] = divmod(map_coeffs(chi, Q), map_coeffs(phi, Q));
            if (!r.is_zero()) break;
            chi = *as_integer_poly(q);
            used = true;
        }
        if (used) candidate = lcm_u64(candidate, k);
    }
    if (chi.degree() != 0) return std::nullopt;

    // Powering is the actual certificate: a nontrivial unipotent part passes
    // the characteristic-polynomial test but never returns to the identity.
    if (!is_identity(Z, matrix_power(Z, A, candidate))) return std::nullopt;
    for (auto d : divisors(candidate))
        if (is_identity(Z, matrix_power(Z, A, d))) return d;
    throw consistency_error("finite_order: divisor search failed");
}

}  // namespace cck
