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

#include "cck/laurent.hpp"
#include "cck/smith.hpp"

namespace cck {

template <class Ring>
using LaurentMatrix = Matrix<LaurentPoly<Ring>>;
using IntLaurentMatrix = LaurentMatrix<IntegerRing>;

/// coker(A) over k[t, t^-1] ≅ ⊕ k[t,t^-1]/(f_i) ⊕ k[t,t^-1]^free_rank, with
/// each f_i monic, of positive degree and with nonzero constant term.
template <class Field>
struct CokernelStructure {
    std::size_t generators = 0;
    std::vector<Poly<Field>> factors;
    std::size_t free_rank = 0;

    bool is_torsion() const { return free_rank == 0; }
    /// Dimension over k; meaningful only when torsion.
    std::size_t dimension() const {
        std::size_t d = 0;
        for (const auto& f : factors) d += static_cast<std::size_t>(f.degree());
        return d;
    }
};

/// Multiply each row by the power of t that makes it a polynomial row with
/// at least one nonzero constant term (zero rows are left as zero).
template <class Field>
MatrixOver<PolyRing<Field>> clear_rows(const Field& F, const LaurentMatrix<Field>& A) {
    MatrixOver<PolyRing<Field>> P(A.rows(), A.cols(), Poly<Field>(F));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        std::optional<long> low;
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A(i, j).is_zero() && (!low || A(i, j).valuation() < *low)) low = A(i, j).valuation();
        if (!low) continue;
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (!A(i, j).is_zero())
                P(i, j) = A(i, j).body().shifted(static_cast<std::size_t>(A(i, j).valuation() - *low));
    }
    return P;
}

template <class Field>
MatrixOver<PolyRing<Field>> to_poly_matrix(const Field& F, const LaurentMatrix<Field>& A) {
    MatrixOver<PolyRing<Field>> P(A.rows(), A.cols(), Poly<Field>(F));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (A(i, j).valuation() < 0) throw precondition_error("matrix has negative powers of t");
            P(i, j) = A(i, j).body().shifted(static_cast<std::size_t>(A(i, j).valuation()));
        }
    return P;
}

template <class Field>
LaurentMatrix<Field> to_laurent_matrix(const Field& F, const MatrixOver<PolyRing<Field>>& P) {
    return P.map([&](const Poly<Field>& p) { return LaurentPoly<Field>(0, p.is_zero() ? Poly<Field>(F) : p); });
}

template <class Target, class Source>
LaurentMatrix<Target> map_coeffs(const LaurentMatrix<Source>& A, const Target& target) {
    LaurentMatrix<Target> out(A.rows(), A.cols(), LaurentPoly<Target>(target));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = map_coeffs(A(i, j), target);
    return out;
}

/// Cokernel of a g × n matrix over k[t, t^-1]: rows are cleared to k[t],
/// Smith form is taken there, and t-power unit factors are stripped.
template <class Field>
CokernelStructure<Field> laurent_cokernel(const Field& F, const LaurentMatrix<Field>& A) {
    PolyRing<Field> R{F};
    auto snf = smith_normal_form(R, clear_rows(F, A));
    CokernelStructure<Field> out;
    out.generators = A.rows();
    out.free_rank = A.rows() - snf.rank;
    for (const auto& d : snf.invariant_factors()) {
        auto f = strip_units(d);
        if (f.degree() > 0) out.factors.push_back(std::move(f));
    }
    return out;
}

/// Companion matrix of a monic polynomial in the basis 1, t, ..., t^(d-1)
/// (column k is the image of t^k).
template <class Field>
MatrixOver<Field> companion(const Field& F, const Poly<Field>& f) {
    const std::size_t d = static_cast<std::size_t>(f.degree());
    auto C = zeros(F, d, d);
    for (std::size_t k = 0; k + 1 < d; ++k) C(k + 1, k) = F.one();
    for (std::size_t i = 0; i < d; ++i) C(i, d - 1) = F.neg(f.coeff(i));
    return C;
}

/// Block-diagonal companion action of t on ⊕ k[t]/(f_i).
template <class Field>
MatrixOver<Field> torsion_action(const Field& F, const std::vector<Poly<Field>>& factors) {
    std::size_t n = 0;
    for (const auto& f : factors) n += static_cast<std::size_t>(f.degree());
    auto T = zeros(F, n, n);
    std::size_t off = 0;
    for (const auto& f : factors) {
        T.set_block(off, off, companion(F, monic(f)));
        off += static_cast<std::size_t>(f.degree());
    }
    return T;
}

/// det(t·I - A), monic of degree n.
template <class Ring>
Poly<Ring> char_poly(const Ring& R, const MatrixOver<Ring>& A) {
    if (!A.is_square()) throw precondition_error("char_poly of a non-square matrix");
    PolyRing<Ring> P{R};
    auto M = zeros(P, A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) {
            M(i, j) = Poly<Ring>::constant(R, R.neg(A(i, j)));
            if (i == j) M(i, j) += P.variable();
        }
    return determinant(P, M);
}

/// Exact multiplicative order of an invertible integer matrix, or nullopt when
/// the order is infinite. Throws precondition_error for |det A| != 1.
std::optional<std::uint64_t> finite_order(const IntMatrix& A);

/// Largest n with phi(n) <= d; every root of unity of degree <= d has order <= this.
std::size_t cyclotomic_index_bound(std::size_t d);

}  // namespace cck
