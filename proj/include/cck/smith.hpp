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
#include <utility>
#include <vector>

#include "cck/linalg.hpp"
#include "cck/poly_ring.hpp"

namespace cck {

/// U·A·V = D with D diagonal, d_1 | d_2 | ... | d_rank, then zeros.
/// V_inv is tracked alongside V because kernel computations need both.
template <class Domain>
struct SnfResult {
    MatrixOver<Domain> U, D, V, V_inv;
    std::size_t rank = 0;

    std::vector<typename Domain::Element> invariant_factors() const {
        std::vector<typename Domain::Element> out;
        for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
        return out;
    }
};

namespace detail {

template <class Domain>
class SnfEngine {
   public:
    using E = typename Domain::Element;

    SnfEngine(const Domain& R, const MatrixOver<Domain>& A)
        : R_(R),
          D_(A),
          U_(identity(R, A.rows())),
          V_(identity(R, A.cols())),
          Vi_(identity(R, A.cols())) {}

    SnfResult<Domain> run() {
        const std::size_t m = D_.rows(), n = D_.cols();
        std::size_t t = 0;
        for (; t < std::min(m, n); ++t) {
            auto pivot = min_entry(t, m, t, n);
            if (!pivot) break;
            move_to(t, pivot->first, pivot->second);
            for (;;) {
                bool leftover = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (R_.is_zero(D_(i, t))) continue;
                    auto [q, r] = R_.divmod(D_(i, t), D_(t, t));
                    row_addmul(i, t, R_.neg(q));
                    leftover = leftover || !R_.is_zero(r);
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (R_.is_zero(D_(t, j))) continue;
                    auto [q, r] = R_.divmod(D_(t, j), D_(t, t));
                    col_addmul(j, t, R_.neg(q));
                    leftover = leftover || !R_.is_zero(r);
                }
                if (leftover) {
                    auto col_best = min_entry(t, m, t, t + 1);
                    auto row_best = min_entry(t, t + 1, t, n);
                    auto best = col_best;
                    if (row_best && R_.size_less(D_(row_best->first, row_best->second), D_(best->first, best->second)))
                        best = row_best;
                    move_to(t, best->first, best->second);
                    continue;
                }
                auto bad = first_non_multiple(t);
                if (!bad) break;
                row_addmul(t, *bad, R_.one());
            }
            auto u = R_.normalizer(D_(t, t));
            if (!R_.is_one(u)) row_scale(t, u);
        }
        return {std::move(U_), std::move(D_), std::move(V_), std::move(Vi_), t};
    }

   private:
    // smallest nonzero entry in the block, ties broken by (row, col) order
    std::optional<std::pair<std::size_t, std::size_t>> min_entry(std::size_t r0, std::size_t r1, std::size_t c0,
                                                                 std::size_t c1) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) {
                if (R_.is_zero(D_(i, j))) continue;
                if (!best || R_.size_less(D_(i, j), D_(best->first, best->second))) best = {{i, j}};
            }
        return best;
    }

    std::optional<std::size_t> first_non_multiple(std::size_t t) const {
        for (std::size_t i = t + 1; i < D_.rows(); ++i)
            for (std::size_t j = t + 1; j < D_.cols(); ++j)
                if (!R_.divides(D_(t, t), D_(i, j))) return i;
        return std::nullopt;
    }

    void move_to(std::size_t t, std::size_t i, std::size_t j) {
        D_.swap_rows(t, i);
        U_.swap_rows(t, i);
        D_.swap_cols(t, j);
        V_.swap_cols(t, j);
        Vi_.swap_rows(t, j);
    }

    // row i += c · row s
    void row_addmul(std::size_t i, std::size_t s, const E& c) {
        for (std::size_t j = 0; j < D_.cols(); ++j) D_(i, j) = R_.add(D_(i, j), R_.mul(c, D_(s, j)));
        for (std::size_t j = 0; j < U_.cols(); ++j) U_(i, j) = R_.add(U_(i, j), R_.mul(c, U_(s, j)));
    }

    // col j += c · col s, so V_inv row s -= c · row j
    void col_addmul(std::size_t j, std::size_t s, const E& c) {
        for (std::size_t i = 0; i < D_.rows(); ++i) D_(i, j) = R_.add(D_(i, j), R_.mul(c, D_(i, s)));
        for (std::size_t i = 0; i < V_.rows(); ++i) V_(i, j) = R_.add(V_(i, j), R_.mul(c, V_(i, s)));
        for (std::size_t k = 0; k < Vi_.cols(); ++k) Vi_(s, k) = R_.sub(Vi_(s, k), R_.mul(c, Vi_(j, k)));
    }

    void row_scale(std::size_t i, const E& u) {
        for (std::size_t j = 0; j < D_.cols(); ++j) D_(i, j) = R_.mul(u, D_(i, j));
        for (std::size_t j = 0; j < U_.cols(); ++j) U_(i, j) = R_.mul(u, U_(i, j));
    }

    const Domain& R_;
    MatrixOver<Domain> D_, U_, V_, Vi_;
};

}  // namespace detail

/// Smith normal form over a Euclidean domain (Z or k[t]). Pivots are chosen
/// by minimal Euclidean size with lowest (row, col) tie-breaking, so the
/// transforms are deterministic; invariant factors are positive over Z and
/// monic over k[t].
template <class Domain>
SnfResult<Domain> smith_normal_form(const Domain& R, const MatrixOver<Domain>& A) {
    return detail::SnfEngine<Domain>(R, A).run();
}

}  // namespace cck
