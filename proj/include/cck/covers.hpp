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
#include <cstdint>
#include <optional>
#include <vector>

#include "cck/normal_forms.hpp"

namespace cck {

/// Finite free chain complex over Z[t, t^-1]. boundaries[j-1] is ∂_j : C_j → C_{j-1},
/// a ranks[j-1] × ranks[j] matrix acting on column vectors.
class TwistedChainComplex {
   public:
    TwistedChainComplex() = default;
    /// Validates shapes and ∂∂ = 0.
    TwistedChainComplex(std::vector<std::size_t> ranks, std::vector<IntLaurentMatrix> boundaries);

    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const std::vector<IntLaurentMatrix>& boundaries() const { return boundaries_; }
    std::size_t degrees() const { return ranks_.size(); }
    /// ∂_j for 1 <= j <= top; zero matrices of the right shape outside that range.
    IntLaurentMatrix boundary(std::size_t j) const;

   private:
    std::vector<std::size_t> ranks_;
    std::vector<IntLaurentMatrix> boundaries_;
};

/// Finite free chain complex over Z with the same conventions.
struct IntChainComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> boundaries;

    IntChainComplex() = default;
    IntChainComplex(std::vector<std::size_t> r, std::vector<IntMatrix> b);
    IntMatrix boundary(std::size_t j) const;
};

/// Algebraic mapping torus: the cone of (t - f) on C(F) ⊗ Z[t, t^-1], so that t
/// acts on the homology of the infinite cyclic cover as f_*.
/// chain_map[j] is the square matrix of f on C_j(F).
TwistedChainComplex mapping_torus_complex(const IntChainComplex& fiber, const std::vector<IntMatrix>& chain_map);

/// H_j(X_∞; κ) for every degree, as κ[t, t^-1]-modules.
template <class Field>
std::vector<CokernelStructure<Field>> infinite_cover_homology(const TwistedChainComplex& X, const Field& F);

template <class Field>
struct FieldHomology {
    std::vector<std::size_t> dims;
    /// Induced action of the chain map on each H_j, in the basis chosen for H_j.
    std::vector<MatrixOver<Field>> actions;
};

/// Homology over a field of a complex of κ-matrices, with the action induced by
/// a chain map (boundaries[j-1] = ∂_j, chain_map[j] on C_j).
template <class Field>
FieldHomology<Field> homology_with_action(const Field& F, const std::vector<std::size_t>& ranks,
                                          const std::vector<MatrixOver<Field>>& boundaries,
                                          const std::vector<MatrixOver<Field>>& chain_map);

/// H_j(X_q; κ) of the q-fold cyclic cover with its deck action, by base change
/// along κ[t, t^-1] → κ[t]/(t^q - 1). Basis order is cell-major, then power of t.
template <class Field>
FieldHomology<Field> cover_homology(const TwistedChainComplex& X, const Field& F, std::uint64_t q);

/// dim H_j(X_q; κ) alone, from the ranks of the expanded boundary maps.
template <class Field>
std::vector<std::size_t> cover_dimensions(const TwistedChainComplex& X, const Field& F, std::uint64_t q);

/// dim H_j(X_q; κ) from the Wang sequence: coker(t^q - 1 | H_j(X_∞)) plus
/// ker(t^q - 1 | H_{j-1}(X_∞)). Requires torsion infinite-cover homology.
template <class Field>
std::vector<std::size_t> wang_dimensions(const TwistedChainComplex& X, const Field& F, std::uint64_t q);

struct SelfCoverWitness {
    std::uint64_t k = 2;
    int sign = 1;
    /// Action of the lifted equivalence on H_j(X_∞; Q), in the companion basis.
    std::vector<RatMatrix> hbar;
};

/// Checks hbar_j · T_j = T_j^{sign·k} · hbar_j in each degree, where T_j is the
/// t-action on H_j(X_∞; Q) in the companion basis of its invariant factors.
std::vector<bool> verify_self_cover_relation(const TwistedChainComplex& X, const SelfCoverWitness& w);

struct DimensionBoundReport {
    bool holds = true;
    struct Row {
        std::uint64_t q;
        std::vector<std::size_t> dims;
        std::vector<bool> within_bound;
    };
    std::vector<Row> rows;
};

/// Tests dim H_j(X_q; κ) <= ranks_j for every listed q.
template <class Field>
DimensionBoundReport dimension_bound_check(const TwistedChainComplex& X, const Field& F,
                                           const std::vector<std::uint64_t>& qs);

// ---------------------------------------------------------------------------

namespace detail {

// Image of p(t) in κ[t]/(t^q - 1) as a q × q matrix: t^k shifts e_i to e_{i+k mod q}.
template <class Field>
MatrixOver<Field> cyclic_block(const Field& F, const LaurentPoly<Field>& p, std::uint64_t q) {
    auto M = zeros(F, q, q);
    if (p.is_zero()) return M;
    const long qq = static_cast<long>(q);
    for (long e = p.valuation(); e <= p.top(); ++e) {
        auto c = p.coeff(e);
        if (F.is_zero(c)) continue;
        long shift = ((e % qq) + qq) % qq;
        for (long i = 0; i < qq; ++i) {
            auto row = static_cast<std::size_t>((i + shift) % qq);
            M(row, static_cast<std::size_t>(i)) = F.add(M(row, static_cast<std::size_t>(i)), c);
        }
    }
    return M;
}

template <class Field>
MatrixOver<Field> expand_cover(const Field& F, const LaurentMatrix<Field>& A, std::uint64_t q) {
    auto M = zeros(F, A.rows() * q, A.cols() * q);
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) M.set_block(i * q, j * q, cyclic_block(F, A(i, j), q));
    return M;
}

}  // namespace detail

template <class Field>
std::vector<CokernelStructure<Field>> infinite_cover_homology(const TwistedChainComplex& X, const Field& F) {
    PolyRing<Field> R{F};
    std::vector<CokernelStructure<Field>> out;
    for (std::size_t j = 0; j < X.degrees(); ++j) {
        const std::size_t rj = X.ranks()[j];
        auto dj = map_coeffs(X.boundary(j), F);
        auto dnext = map_coeffs(X.boundary(j + 1), F);
        // ker ∂_j is spanned by the trailing columns of V; V^-1 ∂_{j+1} expresses
        // the boundaries in that basis (its leading rank rows vanish).
        auto snf = smith_normal_form(R, clear_rows(F, dj));
        auto Vinv = to_laurent_matrix(F, snf.V_inv);
        auto coords = Vinv * dnext;
        for (std::size_t i = 0; i < snf.rank; ++i)
            for (std::size_t c = 0; c < coords.cols(); ++c)
                if (!coords(i, c).is_zero()) throw consistency_error("boundary does not land in the cycles");
        auto Y = coords.block(snf.rank, 0, rj - snf.rank, coords.cols());
        out.push_back(laurent_cokernel(F, Y));
    }
    return out;
}

template <class Field>
FieldHomology<Field> homology_with_action(const Field& F, const std::vector<std::size_t>& ranks,
                                          const std::vector<MatrixOver<Field>>& boundaries,
                                          const std::vector<MatrixOver<Field>>& chain_map) {
    FieldHomology<Field> out;
    const std::size_t n = ranks.size();
    auto boundary = [&](std::size_t j) {
        if (j == 0 || j >= n) return zeros(F, j == 0 ? 0 : ranks[j - 1], j < n ? ranks[j] : 0);
        return boundaries[j - 1];
    };
    for (std::size_t j = 0; j < n; ++j) {
        auto Z = nullspace(F, boundary(j));
        auto B = boundary(j + 1);
        // pick cycles completing a basis of the boundaries
        auto e = rref(F, hconcat(B, Z));
        std::vector<std::size_t> bcols, hcols;
        for (auto c : e.pivots) (c < B.cols() ? bcols : hcols).push_back(c);
        auto basis = zeros(F, ranks[j], bcols.size() + hcols.size());
        std::size_t col = 0;
        auto joined = hconcat(B, Z);
        for (auto c : bcols) {
            for (std::size_t r = 0; r < ranks[j]; ++r) basis(r, col) = joined(r, c);
            ++col;
        }
        for (auto c : hcols) {
            for (std::size_t r = 0; r < ranks[j]; ++r) basis(r, col) = joined(r, c);
            ++col;
        }
        const std::size_t h = hcols.size();
        out.dims.push_back(h);
        auto reps = basis.block(0, bcols.size(), ranks[j], h);
        auto images = multiply(F, chain_map[j], reps);
        auto coords = solve(F, basis, images);
        if (!coords) throw consistency_error("chain map does not preserve cycles");
        out.actions.push_back(coords->block(bcols.size(), 0, h, h));
    }
    return out;
}

template <class Field>
FieldHomology<Field> cover_homology(const TwistedChainComplex& X, const Field& F, std::uint64_t q) {
    if (q < 1) throw precondition_error("cover degree q must be at least 1");
    std::vector<std::size_t> ranks;
    std::vector<MatrixOver<Field>> boundaries, deck;
    for (auto r : X.ranks()) ranks.push_back(r * q);
    for (const auto& d : X.boundaries()) boundaries.push_back(detail::expand_cover(F, map_coeffs(d, F), q));
    auto t = LaurentPoly<Field>::monomial(F, F.one(), 1);
    for (auto r : X.ranks()) {
        auto T = zeros(F, r * q, r * q);
        for (std::size_t c = 0; c < r; ++c) T.set_block(c * q, c * q, detail::cyclic_block(F, t, q));
        deck.push_back(std::move(T));
    }
    return homology_with_action(F, ranks, boundaries, deck);
}

template <class Field>
std::vector<std::size_t> cover_dimensions(const TwistedChainComplex& X, const Field& F, std::uint64_t q) {
    if (q < 1) throw precondition_error("cover degree q must be at least 1");
    const std::size_t n = X.degrees();
    std::vector<std::size_t> rk(n + 1, 0);  // rk[j] = rank ∂_j
    for (std::size_t j = 1; j < n; ++j) rk[j] = rank(F, detail::expand_cover(F, map_coeffs(X.boundary(j), F), q));
    std::vector<std::size_t> dims(n);
    for (std::size_t j = 0; j < n; ++j) dims[j] = X.ranks()[j] * q - rk[j] - rk[j + 1];
    return dims;
}

template <class Field>
std::vector<std::size_t> wang_dimensions(const TwistedChainComplex& X, const Field& F, std::uint64_t q) {
    if (q < 1) throw precondition_error("cover degree q must be at least 1");
    auto H = infinite_cover_homology(X, F);
    std::vector<std::size_t> cok(H.size()), ker(H.size());
    for (std::size_t j = 0; j < H.size(); ++j) {
        if (!H[j].is_torsion())
            throw precondition_error("H_" + std::to_string(j) +
                                     "(X_inf) has a free part; the covers have unbounded homology");
        auto T = torsion_action(F, H[j].factors);
        const std::size_t n = T.rows();
        auto M = subtract(F, matrix_power(F, T, q), identity(F, n));
        std::size_t rk = rank(F, M);
        cok[j] = n - rk;  // dim coker = dim ker for an endomorphism
        ker[j] = n - rk;
    }
    std::vector<std::size_t> dims(H.size());
    for (std::size_t j = 0; j < H.size(); ++j) dims[j] = cok[j] + (j > 0 ? ker[j - 1] : 0);
    return dims;
}

template <class Field>
DimensionBoundReport dimension_bound_check(const TwistedChainComplex& X, const Field& F,
                                           const std::vector<std::uint64_t>& qs) {
    DimensionBoundReport report;
    for (auto q : qs) {
        DimensionBoundReport::Row row{q, cover_dimensions(X, F, q), {}};
        for (std::size_t j = 0; j < row.dims.size(); ++j) {
            bool ok = row.dims[j] <= X.ranks()[j];
            row.within_bound.push_back(ok);
            report.holds = report.holds && ok;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace cck
