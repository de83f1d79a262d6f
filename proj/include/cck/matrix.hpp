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

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cck/arith.hpp"

namespace cck {

/// Dense row-major matrix over an arbitrary exact scalar. Every matrix carries a
/// zero element so that empty shapes and products keep their coefficient ring.
template <class T>
class Matrix {
   public:
    using Scalar = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix Zero(std::size_t rows, std::size_t cols, const T& zero) { return Matrix(rows, cols, zero); }
    static Matrix Identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    /// Rows given as nested lists; every row must have the same length.
    static Matrix FromRows(const std::vector<std::vector<T>>& rows, const T& zero) {
        std::size_t c = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), c, zero);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw precondition_error("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
        Matrix b(nr, nc, zero_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_, f(zero_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (!(a.data_[k] == b.data_[k])) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.data_) x = -x;
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw precondition_error("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == a.zero_) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }

   private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw precondition_error("matrix shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

inline IntMatrix int_identity(std::size_t n) { return IntMatrix::Identity(n, 0, 1); }

/// Build an integer matrix from small literals, row by row.
inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Integer>> v;
    for (const auto& r : rows) {
        std::vector<Integer> row;
        for (long x : r) row.emplace_back(x);
        v.push_back(std::move(row));
    }
    return IntMatrix::FromRows(v, 0);
}

/// Horizontal concatenation [a | b].
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw precondition_error("hconcat row mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols(), a.zero());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

/// Fast exponentiation for square matrices with a known identity.
template <class T>
Matrix<T> power(Matrix<T> base, std::uint64_t e, const Matrix<T>& identity) {
    Matrix<T> acc = identity;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

}  // namespace cck
