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

#include "cck/modules.hpp"

#include <algorithm>
#include <functional>

namespace cck {

namespace {

constexpr std::size_t kMaxMinors = 200000;

// All nonzero g × g minors of the row-cleared relation matrix, in Z[t].
std::vector<IntPoly> maximal_minors(const ModulePresentation& M) {
    IntegerRing Z;
    PolyRing<IntegerRing> R{Z};
    const std::size_t g = M.generators, n = M.relations.cols();
    std::vector<IntPoly> out;
    if (g == 0) {
        out.push_back(R.one());
        return out;
    }
    if (n < g) return out;
    auto P = clear_rows(Z, M.relations);

    std::vector<std::size_t> pick(g);
    for (std::size_t i = 0; i < g; ++i) pick[i] = i;
    std::size_t visited = 0;
    for (;;) {
        if (++visited > kMaxMinors) throw precondition_error("presentation has too many maximal minors");
        auto sub = zeros(R, g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) sub(i, j) = P(i, pick[j]);
        auto d = determinant(R, sub);
        if (!d.is_zero()) out.push_back(std::move(d));
        // next combination in lexicographic order
        std::size_t k = g;
        while (k > 0 && pick[k - 1] == n - g + k - 1) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < g; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

IntPoly minors_gcd(const std::vector<IntPoly>& minors) {
    IntPoly g(IntegerRing{});
    for (const auto& m : minors) g = gcd(g, m);
    return g;
}

void add_prime_divisors(const Integer& n, std::vector<Integer>& out) {
    for (auto& p : prime_divisors(n)) out.push_back(p);
}

}  // namespace

ModulePresentation::ModulePresentation(std::size_t g, IntLaurentMatrix rel) : generators(g), relations(std::move(rel)) {
    if (relations.rows() != generators)
        throw precondition_error("relation matrix has " + std::to_string(relations.rows()) + " rows for " +
                                 std::to_string(generators) + " generators");
}

ModulePresentation ModulePresentation::principal(const IntLaurent& f) {
    IntLaurentMatrix rel(1, 1, IntLaurent());
    rel(0, 0) = f;
    return ModulePresentation(1, std::move(rel));
}

IntLaurent order_ideal(const ModulePresentation& M) {
    auto minors = maximal_minors(M);
    if (minors.empty()) return IntLaurent();
    IntPoly g = minors_gcd(minors);
    auto nf = laurent_normalize(IntLaurent(0, g));
    return IntLaurent(0, nf.primitive.scaled(abs(nf.scale)));
}

ResidueCokernel base_change_residue(const ModulePresentation& M, const Integer& P) {
    if (P == 0) {
        RationalField Q;
        return laurent_cokernel(Q, map_coeffs(M.relations, Q));
    }
    PrimeField F(P);
    return laurent_cokernel(F, map_coeffs(M.relations, F));
}

Property1Check property1_check(const ModulePresentation& M, const Integer& P) {
    Property1Check out;
    auto residue = base_change_residue(M, P);
    if (P != 0) {
        const auto& c = std::get<CokernelStructure<PrimeField>>(residue);
        // every element algebraic over F_p is integral over F_p
        out.finite_dim = out.t_integral = out.tinv_integral = c.is_torsion();
        if (c.is_torsion()) out.dim = c.dimension();
        return out;
    }
    const auto& c = std::get<CokernelStructure<RationalField>>(residue);
    out.finite_dim = c.is_torsion();
    if (!out.finite_dim) return out;
    out.dim = c.dimension();

    RationalField Q;
    RatPoly chi = RatPoly::constant(Q, 1);
    out.t_integral = out.tinv_integral = true;
    for (const auto& f : c.factors) {
        chi *= f;
        // eigenvalues of t are the roots of f, of t^-1 the roots of the reversed polynomial
        if (!as_integer_poly(f)) {
            out.t_integral = false;
            if (!out.t_offender) out.t_offender = f;
        }
        if (!as_integer_poly(monic(f.reversed()))) {
            out.tinv_integral = false;
            if (!out.tinv_offender) out.tinv_offender = f;
        }
    }
    out.char_poly = chi;
    return out;
}

std::optional<std::vector<Integer>> relevant_primes(const ModulePresentation& M) {
    auto minors = maximal_minors(M);
    if (minors.empty()) return std::nullopt;
    std::vector<Integer> primes;
    IntPoly D = minors_gcd(minors);
    IntPoly delta = primitive_part(D);
    delta = delta.unshifted(delta.low_degree());
    // (a) the rank over F_p(t) drops exactly when p divides every minor
    add_prime_divisors(content(D), primes);
    // (b) the span of the order ideal shrinks mod p
    add_prime_divisors(delta.leading(), primes);
    add_prime_divisors(delta.trailing(), primes);
    // (c) the cofactors m_i / D acquire a common factor mod p only when p
    // divides the denominator of a rational Bezout relation sum a_i q_i = 1
    if (minors.size() > 1) {
        RationalField Q;
        std::vector<RatPoly> q;
        for (const auto& m : minors) q.push_back(map_coeffs(divexact(m, D), Q));
        RatPoly g = q[0];
        std::vector<RatPoly> coeffs{RatPoly::constant(Q, 1)};
        for (std::size_t i = 1; i < q.size(); ++i) {
            auto [h, s, u] = xgcd(g, q[i]);
            for (auto& a : coeffs) a = a * s;
            coeffs.push_back(u);
            g = h;
        }
        if (!(g == RatPoly::constant(Q, 1))) throw consistency_error("cofactors of the order ideal are not coprime");
        Integer den = 1;
        for (const auto& a : coeffs)
            for (const auto& x : a.coeffs()) den = lcm(den, x.get_den());
        add_prime_divisors(den, primes);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

std::string to_string(FailureKind kind) {
    switch (kind) {
        case FailureKind::InfiniteDimension:
            return "infinite_dimension";
        case FailureKind::NonIntegralT:
            return "non_integral_t";
        case FailureKind::NonIntegralTInverse:
            return "non_integral_t_inverse";
    }
    return "unknown";
}

FinGenVerdict finitely_generated_over_Z(const ModulePresentation& M) {
    FinGenVerdict verdict;
    RationalField Q;
    auto at_zero = property1_check(M, 0);
    if (!at_zero.finite_dim) {
        verdict.witness = FinGenWitness{0, FailureKind::InfiniteDimension, RatPoly(Q)};
        return verdict;
    }
    if (!at_zero.t_integral) {
        verdict.witness = FinGenWitness{0, FailureKind::NonIntegralT, *at_zero.t_offender};
        return verdict;
    }
    if (!at_zero.tinv_integral) {
        verdict.witness = FinGenWitness{0, FailureKind::NonIntegralTInverse, *at_zero.tinv_offender};
        return verdict;
    }
    verdict.relevant_primes = *relevant_primes(M);
    for (const auto& p : verdict.relevant_primes) {
        auto check = property1_check(M, p);
        if (!check.finite_dim) {
            verdict.witness = FinGenWitness{p, FailureKind::InfiniteDimension, RatPoly(Q)};
            return verdict;
        }
    }
    verdict.finitely_generated = true;
    if (M.generators == M.relations.cols()) {
        auto delta = order_ideal(M);
        const auto& body = delta.body();
        if (body.leading() == 1 && abs(body.trailing()) == 1) verdict.underlying_rank = static_cast<std::size_t>(body.degree());
    }
    return verdict;
}

}  // namespace cck
