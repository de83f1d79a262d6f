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

#include "cck/matrix.hpp"

namespace cck {

// Ring-context linear algebra. These work for every coefficient context
// (Z, Q, F_p, k[t]) because arithmetic is routed through the context.

template <class Ring>
using MatrixOver = Matrix<typename Ring::Element>;

template <class Ring>
MatrixOver<Ring> zeros(const Ring& R, std::size_t rows, std::size_t cols) {
    return MatrixOver<Ring>(rows, cols, R.zero());
}

template <class Ring>
MatrixOver<Ring> identity(const Ring& R, std::size_t n) {
    return MatrixOver<Ring>::Identity(n, R.zero(), R.one());
}

template <class Ring>
MatrixOver<Ring> multiply(const Ring& R, const MatrixOver<Ring>& a, const MatrixOver<Ring>& b) {
    if (a.cols() != b.rows()) throw precondition_error("matrix product shape mismatch");
    MatrixOver<Ring> r = zeros(R, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (R.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = R.add(r(i, j), R.mul(a(i, k), b(k, j)));
        }
    return r;
}

template <class Ring>
MatrixOver<Ring> subtract(const Ring& R, const MatrixOver<Ring>& a, const MatrixOver<Ring>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw precondition_error("matrix shape mismatch");
    MatrixOver<Ring> r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = R.sub(a(i, j), b(i, j));
    return r;
}

template <class Ring>
MatrixOver<Ring> matrix_power(const Ring& R, MatrixOver<Ring> base, std::uint64_t e) {
    MatrixOver<Ring> acc = identity(R, base.rows());
    while (e > 0) {
        if (e & 1) acc = multiply(R, acc, base);
        e >>= 1;
        if (e) base = multiply(R, base, base);
    }
    return acc;
}

template <class Ring>
bool is_identity(const Ring& R, const MatrixOver<Ring>& a) {
    if (!a.is_square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!R.equal(a(i, j), i == j ? R.one() : R.zero())) return false;
    return true;
}

template <class Ring>
bool is_zero_matrix(const Ring& R, const MatrixOver<Ring>& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!R.is_zero(a(i, j))) return false;
    return true;
}

template <class Field>
struct Echelon {
    MatrixOver<Field> reduced;         ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination over a field.
template <class Field>
Echelon<Field> rref(const Field& F, MatrixOver<Field> a) {
    static_assert(Field::is_field, "rref needs a field");
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && F.is_zero(a(pr, col))) ++pr;
        if (pr == a.rows()) continue;
        a.swap_rows(pr, row);
        auto inv = F.inv(a(row, col));
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = F.mul(a(row, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || F.is_zero(a(i, col))) continue;
            auto c = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!F.is_zero(a(row, j))) a(i, j) = F.sub(a(i, j), F.mul(c, a(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

/// Forward elimination only; keeps sparse matrices sparse.
template <class Field>
std::size_t rank(const Field& F, MatrixOver<Field> a) {
    static_assert(Field::is_field, "rank needs a field");
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pr = row;
        while (pr < a.rows() && F.is_zero(a(pr, col))) ++pr;
        if (pr == a.rows()) continue;
        a.swap_rows(pr, row);
        auto inv = F.inv(a(row, col));
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            if (F.is_zero(a(i, col))) continue;
            auto c = F.mul(a(i, col), inv);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (!F.is_zero(a(row, j))) a(i, j) = F.sub(a(i, j), F.mul(c, a(row, j)));
        }
        ++row;
    }
    return row;
}

/// Columns form a basis of {x : a·x = 0}.
template <class Field>
MatrixOver<Field> nullspace(const Field& F, const MatrixOver<Field>& a) {
    auto e = rref(F, a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    MatrixOver<Field> basis = zeros(F, a.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = F.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = F.neg(e.reduced(r, free_cols[k]));
    }
    return basis;
}

template <class Field>
std::optional<MatrixOver<Field>> inverse(const Field& F, const MatrixOver<Field>& a) {
    if (!a.is_square()) throw precondition_error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    auto e = rref(F, hconcat(a, identity(F, n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

/// Solve a·x = b for x (columns of b independently); nullopt when inconsistent.
template <class Field>
std::optional<MatrixOver<Field>> solve(const Field& F, const MatrixOver<Field>& a, const MatrixOver<Field>& b) {
    auto e = rref(F, hconcat(a, b));
    MatrixOver<Field> x = zeros(F, a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t c = e.pivots[r];
        if (c >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(r, a.cols() + j);
    }
    return x;
}

/// Fraction-free (Bareiss) determinant over an integral domain with exact division.
template <class Ring>
typename Ring::Element determinant(const Ring& R, MatrixOver<Ring> a) {
    if (!a.is_square()) throw precondition_error("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return R.one();
    bool negate = false;
    auto prev = R.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (R.is_zero(a(k, k))) {
            std::size_t r = k + 1;
            while (r < n && R.is_zero(a(r, k))) ++r;
            if (r == n) return R.zero();
            a.swap_rows(k, r);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = R.divexact(R.sub(R.mul(a(k, k), a(i, j)), R.mul(a(i, k), a(k, j))), prev);
            a(i, k) = R.zero();
        }
        prev = a(k, k);
    }
    auto d = a(n - 1, n - 1);
    return negate ? R.neg(d) : d;
}

}  // namespace cck
