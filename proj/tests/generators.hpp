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

// Random complexes with known structure, built as direct sums of small pieces
// and then scrambled by unimodular changes of basis.

#include <vector>

#include "cck/covers.hpp"
#include "support.hpp"

namespace cck::test {

/// Random Laurent polynomial with coefficients in [-2, 2], body degree <= deg,
/// and at least one coefficient ±1 so it stays nonzero modulo every prime.
inline IntLaurent random_nonvanishing(int deg) {
    std::vector<Integer> c;
    int d = static_cast<int>(uniform(0, deg));
    for (int i = 0; i <= d; ++i) c.emplace_back(uniform(-2, 2));
    c[static_cast<std::size_t>(uniform(0, d))] = uniform(0, 1) ? 1 : -1;
    return IntLaurent(IntegerRing{}, uniform(-1, 0), c);
}

/// Non-unit with unit constant term: half the time a small cyclotomic
/// polynomial (so cover homology depends on q), otherwise random of degree 1..2.
inline IntLaurent random_nonunit() {
    static const std::vector<std::vector<long>> cyclo{{-1, 1}, {1, 1}, {1, 1, 1}, {1, -1, 1}, {1, 0, 1}};
    std::vector<Integer> c;
    if (uniform(0, 1)) {
        for (long x : cyclo[static_cast<std::size_t>(uniform(0, 4))]) c.emplace_back(x);
    } else {
        int d = static_cast<int>(uniform(1, 2));
        for (int i = 0; i <= d; ++i) c.emplace_back(uniform(-2, 2));
        c[0] = uniform(0, 1) ? 1 : -1;
        while (c.back() == 0) c.back() = uniform(-2, 2);
    }
    return IntLaurent(IntegerRing{}, uniform(-1, 0), c);
}

struct ElementaryOp {
    std::size_t target, source;
    IntLaurent factor;
};

/// Apply row/column scrambling: ∂_j ← P_{j-1} ∂_j P_j^{-1} with each P_j a product
/// of elementary matrices I + c·E_{target,source}.
inline std::vector<IntLaurentMatrix> scramble(const std::vector<std::size_t>& ranks, std::vector<IntLaurentMatrix> d,
                                              int ops_per_degree) {
    for (std::size_t j = 0; j < ranks.size(); ++j) {
        if (ranks[j] < 2) continue;
        for (int s = 0; s < ops_per_degree; ++s) {
            std::size_t a = static_cast<std::size_t>(uniform(0, static_cast<long>(ranks[j]) - 1));
            std::size_t b = static_cast<std::size_t>(uniform(0, static_cast<long>(ranks[j]) - 2));
            if (b >= a) ++b;
            IntLaurent c = IntLaurent::monomial(IntegerRing{}, uniform(0, 1) ? 1 : -1, uniform(-1, 1));
            // P = I + c E_ab acts on C_j. ∂_j ← ∂_j P^{-1}: column b -= c · column a.
            if (j >= 1) {
                auto& m = d[j - 1];
                for (std::size_t r = 0; r < m.rows(); ++r) m(r, b) = m(r, b) - c * m(r, a);
            }
            // ∂_{j+1} ← P ∂_{j+1}: row a += c · row b.
            if (j + 1 < ranks.size()) {
                auto& m = d[j];
                for (std::size_t k = 0; k < m.cols(); ++k) m(a, k) = m(a, k) + c * m(b, k);
            }
        }
    }
    return d;
}

/// Random twisted complex in degrees 0..2 whose infinite-cover homology is
/// torsion over Q and over every F_p.
inline TwistedChainComplex random_torsion_complex() {
    struct Piece {
        int kind;  // 0: Λ -f-> Λ in degrees (1,0); 1: same in (2,1); 2: Koszul in (2,1,0)
        IntLaurent a, b;
    };
    std::vector<Piece> pieces;
    std::vector<std::size_t> ranks(3, 0);
    int count = static_cast<int>(uniform(1, 3));
    for (int i = 0; i < count; ++i) {
        int kind = static_cast<int>(uniform(0, 2));
        std::vector<std::size_t> need(3, 0);
        if (kind == 0) need = {1, 1, 0};
        if (kind == 1) need = {0, 1, 1};
        if (kind == 2) need = {1, 2, 1};
        bool fits = true;
        for (int j = 0; j < 3; ++j) fits = fits && ranks[static_cast<std::size_t>(j)] + need[static_cast<std::size_t>(j)] <= 4;
        if (!fits) continue;
        pieces.push_back({kind, random_nonunit(), random_nonvanishing(1)});
        for (int j = 0; j < 3; ++j) ranks[static_cast<std::size_t>(j)] += need[static_cast<std::size_t>(j)];
    }
    std::vector<IntLaurentMatrix> d{IntLaurentMatrix(ranks[0], ranks[1], IntLaurent()),
                                    IntLaurentMatrix(ranks[1], ranks[2], IntLaurent())};
    std::size_t o0 = 0, o1 = 0, o2 = 0;
    for (const auto& p : pieces) {
        if (p.kind == 0) {
            d[0](o0++, o1++) = p.a;
        } else if (p.kind == 1) {
            d[1](o1++, o2++) = p.a;
        } else {
            // Λ -[b; -a]-> Λ^2 -[a b]-> Λ
            d[0](o0, o1) = p.a;
            d[0](o0, o1 + 1) = p.b;
            d[1](o1, o2) = p.b;
            d[1](o1 + 1, o2) = -p.a;
            ++o0;
            o1 += 2;
            ++o2;
        }
    }
    d = scramble(ranks, std::move(d), 2);
    // drop empty top degrees
    while (ranks.size() > 1 && ranks.back() == 0) {
        ranks.pop_back();
        d.pop_back();
    }
    return TwistedChainComplex(ranks, d);
}

struct RandomFiber {
    IntChainComplex fiber;
    std::vector<IntMatrix> f;
    std::vector<IntMatrix> free_action;  ///< f_* on H_j(F; Q) in the standard basis
};

/// Random finite free Z-complex with a chain endomorphism, built from pieces
/// Z -n-> Z and free cells, conjugated by unimodular matrices.
inline RandomFiber random_fiber_with_map() {
    const std::size_t top = static_cast<std::size_t>(uniform(1, 2));
    std::vector<std::size_t> free_cells(top + 1), pieces(top + 1);  // pieces[j]: Z -n-> Z in degrees (j, j-1)
    for (std::size_t j = 0; j <= top; ++j) free_cells[j] = static_cast<std::size_t>(uniform(0, 2));
    for (std::size_t j = 1; j <= top; ++j) pieces[j] = static_cast<std::size_t>(uniform(0, 1));
    std::vector<std::size_t> ranks(top + 1);
    for (std::size_t j = 0; j <= top; ++j) ranks[j] = free_cells[j] + pieces[j] + (j + 1 <= top ? pieces[j + 1] : 0);
    if (ranks[0] == 0) {
        free_cells[0] = 1;
        ranks[0] = 1;
    }
    // layout per degree: [free cells | tops of pieces (j,j-1) | bottoms of pieces (j+1,j)]
    std::vector<IntMatrix> d, f;
    std::vector<IntMatrix> free_action;
    for (std::size_t j = 0; j <= top; ++j) {
        IntMatrix fj(ranks[j], ranks[j], 0);
        auto A = random_int_matrix(free_cells[j], free_cells[j], -2, 2);
        fj.set_block(0, 0, A);
        free_action.push_back(A);
        f.push_back(fj);
    }
    std::vector<long> scalars;
    for (std::size_t j = 1; j <= top; ++j) {
        IntMatrix dj(ranks[j - 1], ranks[j], 0);
        for (std::size_t k = 0; k < pieces[j]; ++k) {
            long n = uniform(1, 3) * (uniform(0, 1) ? 1 : -1);
            long c = uniform(-2, 2);
            std::size_t top_idx = free_cells[j] + k;
            std::size_t bottom_idx = free_cells[j - 1] + pieces[j - 1] + k;
            dj(bottom_idx, top_idx) = n;
            f[j](top_idx, top_idx) = c;
            f[j - 1](bottom_idx, bottom_idx) = c;
        }
        d.push_back(dj);
    }
    // conjugate: ∂_j ← P_{j-1} ∂_j P_j^{-1}, f_j ← P_j f_j P_j^{-1}
    RationalField Q;
    IntegerRing Z;
    std::vector<IntMatrix> P, Pinv;
    for (std::size_t j = 0; j <= top; ++j) {
        auto p = random_unimodular(ranks[j]);
        auto pi = inverse(Q, p.map([](const Integer& x) { return Rational(x); }))->map([](const Rational& x) {
            return Integer(x.get_num());
        });
        P.push_back(p);
        Pinv.push_back(pi);
    }
    for (std::size_t j = 1; j <= top; ++j) d[j - 1] = multiply(Z, multiply(Z, P[j - 1], d[j - 1]), Pinv[j]);
    for (std::size_t j = 0; j <= top; ++j) f[j] = multiply(Z, multiply(Z, P[j], f[j]), Pinv[j]);
    return {IntChainComplex(ranks, d), f, free_action};
}

}  // namespace cck::test

namespace cck::test {

/// Matrix of ζ ↦ ζ^j on Z[ζ_n] in the basis 1, ζ, ..., ζ^(φ(n)-1); for gcd(j, n) = 1
/// it conjugates the companion C of Φ_n to C^j.
inline IntMatrix galois_matrix(std::uint64_t n, std::uint64_t j) {
    RationalField Q;
    auto phi = map_coeffs(cyclotomic(n), Q);
    const std::size_t d = static_cast<std::size_t>(phi.degree());
    IntMatrix M(d, d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        auto x = RatPoly::monomial(Q, 1, static_cast<std::size_t>((i * j) % n));
        auto r = divmod(x, phi).second;
        for (std::size_t c = 0; c < d; ++c) M(c, i) = Integer(r.coeff(c).get_num());
    }
    return M;
}

inline IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    IntMatrix out(n, n, 0);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        out.set_block(off, off, b);
        off += b.rows();
    }
    return out;
}

struct PropInstance {
    IntMatrix A, B;
    std::uint64_t k;
    int sign;
};

/// A = P·diag(C_{n_i})·P^-1 of finite order, k prime to every n_i, and
/// B = P·diag(σ_{j_i})·P^-1 with σ realising A^k ↦ A^sign.
inline PropInstance random_prop_instance() {
    static const std::uint64_t orders[] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
    std::vector<std::uint64_t> ns;
    std::size_t size = 0;
    const std::size_t target = static_cast<std::size_t>(uniform(1, 6));
    while (size < target) {
        auto n = orders[uniform(0, 10)];
        auto d = static_cast<std::size_t>(euler_phi(n));
        if (size + d > 6) continue;
        ns.push_back(n);
        size += d;
    }
    std::uint64_t order = 1;
    for (auto n : ns) order = lcm_u64(order, n);
    std::uint64_t k;
    do k = static_cast<std::uint64_t>(uniform(2, 40));
    while (gcd_u64(k, order) != 1);
    int sign = uniform(0, 1) ? 1 : -1;
    std::vector<IntMatrix> comps, sigmas;
    RationalField Q;
    for (auto n : ns) {
        IntegerRing Z;
        auto C = companion(Z, cyclotomic(n));
        comps.push_back(C);
        // σ_j C^k σ_j^-1 = C^(jk); want jk ≡ sign mod n
        std::uint64_t j = 1;
        while ((j * k) % n != (sign > 0 ? 1 % n : (n - 1) % n)) ++j;
        sigmas.push_back(galois_matrix(n, j));
    }
    IntegerRing Z;
    auto P = random_unimodular(size, 8, 1);
    auto Pinv = inverse(Q, P.map([](const Integer& x) { return Rational(x); }))->map([](const Rational& x) {
        return Integer(x.get_num());
    });
    return {multiply(Z, multiply(Z, P, block_diag(comps)), Pinv), multiply(Z, multiply(Z, P, block_diag(sigmas)), Pinv),
            k, sign};
}

}  // namespace cck::test
