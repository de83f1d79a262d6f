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

#include "cck/covers.hpp"

namespace cck {

namespace {

std::string degree_tag(std::size_t j) { return "∂_" + std::to_string(j); }

}  // namespace

TwistedChainComplex::TwistedChainComplex(std::vector<std::size_t> ranks, std::vector<IntLaurentMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
    if (ranks_.empty()) throw precondition_error("a chain complex needs at least one degree");
    if (boundaries_.size() + 1 != ranks_.size())
        throw precondition_error("expected " + std::to_string(ranks_.size() - 1) + " boundary matrices, got " +
                                 std::to_string(boundaries_.size()));
    for (std::size_t j = 1; j < ranks_.size(); ++j) {
        const auto& d = boundaries_[j - 1];
        if (d.rows() != ranks_[j - 1] || d.cols() != ranks_[j])
            throw precondition_error(degree_tag(j) + " has shape " + std::to_string(d.rows()) + "x" +
                                     std::to_string(d.cols()) + ", expected " + std::to_string(ranks_[j - 1]) + "x" +
                                     std::to_string(ranks_[j]));
    }
    for (std::size_t j = 2; j < ranks_.size(); ++j) {
        auto dd = boundaries_[j - 2] * boundaries_[j - 1];
        for (std::size_t r = 0; r < dd.rows(); ++r)
            for (std::size_t c = 0; c < dd.cols(); ++c)
                if (!dd(r, c).is_zero())
                    throw precondition_error(degree_tag(j - 1) + " ∘ " + degree_tag(j) + " is not zero");
    }
}

IntLaurentMatrix TwistedChainComplex::boundary(std::size_t j) const {
    if (j == 0) return IntLaurentMatrix(0, ranks_[0], IntLaurent());
    if (j >= ranks_.size()) return IntLaurentMatrix(ranks_.back(), 0, IntLaurent());
    return boundaries_[j - 1];
}

IntChainComplex::IntChainComplex(std::vector<std::size_t> r, std::vector<IntMatrix> b)
    : ranks(std::move(r)), boundaries(std::move(b)) {
    IntegerRing Z;
    if (ranks.empty()) throw precondition_error("a chain complex needs at least one degree");
    if (boundaries.size() + 1 != ranks.size()) throw precondition_error("boundary count does not match ranks");
    for (std::size_t j = 1; j < ranks.size(); ++j)
        if (boundaries[j - 1].rows() != ranks[j - 1] || boundaries[j - 1].cols() != ranks[j])
            throw precondition_error(degree_tag(j) + " of the fiber has the wrong shape");
    for (std::size_t j = 2; j < ranks.size(); ++j)
        if (!is_zero_matrix(Z, multiply(Z, boundaries[j - 2], boundaries[j - 1])))
            throw precondition_error("fiber complex has ∂∂ != 0 in degree " + std::to_string(j));
}

IntMatrix IntChainComplex::boundary(std::size_t j) const {
    if (j == 0) return IntMatrix(0, ranks[0], 0);
    if (j >= ranks.size()) return IntMatrix(ranks.back(), 0, 0);
    return boundaries[j - 1];
}

TwistedChainComplex mapping_torus_complex(const IntChainComplex& fiber, const std::vector<IntMatrix>& f) {
    IntegerRing Z;
    const std::size_t n = fiber.ranks.size();
    if (f.size() != n) throw precondition_error("chain map needs one matrix per degree");
    for (std::size_t j = 0; j < n; ++j)
        if (f[j].rows() != fiber.ranks[j] || f[j].cols() != fiber.ranks[j])
            throw precondition_error("chain map in degree " + std::to_string(j) + " has the wrong shape");
    for (std::size_t j = 1; j < n; ++j)
        if (!(multiply(Z, f[j - 1], fiber.boundaries[j - 1]) == multiply(Z, fiber.boundaries[j - 1], f[j])))
            throw precondition_error("f does not commute with ∂ in degree " + std::to_string(j));

    auto lift = [](const IntMatrix& m) { return m.map([](const Integer& x) { return IntLaurent::constant(IntegerRing{}, x); }); };
    auto r = [&](long j) -> std::size_t { return j < 0 || j >= static_cast<long>(n) ? 0 : fiber.ranks[static_cast<std::size_t>(j)]; };
    // t·I - f_j on C_j(F) ⊗ Z[t^±]
    auto phi = [&](std::size_t j) {
        auto m = lift(-f[j]);
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += IntLaurent::monomial(IntegerRing{}, 1, 1);
        return m;
    };

    std::vector<std::size_t> ranks;
    for (std::size_t j = 0; j <= n; ++j) ranks.push_back(r(static_cast<long>(j)) + r(static_cast<long>(j) - 1));
    std::vector<IntLaurentMatrix> boundaries;
    for (std::size_t j = 1; j <= n; ++j) {
        // cone_j = C_j ⊕ C_{j-1};  ∂(a, b) = (∂a + φ b, -∂b)
        const std::size_t rj = r(static_cast<long>(j)), rj1 = r(static_cast<long>(j) - 1), rj2 = r(static_cast<long>(j) - 2);
        IntLaurentMatrix D(rj1 + rj2, rj + rj1, IntLaurent());
        if (j < n) D.set_block(0, 0, lift(fiber.boundaries[j - 1]));
        D.set_block(0, rj, phi(j - 1));
        if (j >= 2) D.set_block(rj1, rj, lift(-fiber.boundaries[j - 2]));
        boundaries.push_back(std::move(D));
    }
    return TwistedChainComplex(std::move(ranks), std::move(boundaries));
}

std::vector<bool> verify_self_cover_relation(const TwistedChainComplex& X, const SelfCoverWitness& w) {
    RationalField Q;
    if (w.k < 2) throw precondition_error("self-covering degree k must exceed 1");
    if (w.sign != 1 && w.sign != -1) throw precondition_error("sign must be +1 or -1");
    auto H = infinite_cover_homology(X, Q);
    if (w.hbar.size() != H.size())
        throw precondition_error("witness has " + std::to_string(w.hbar.size()) + " matrices for " +
                                 std::to_string(H.size()) + " degrees");
    std::vector<bool> out;
    for (std::size_t j = 0; j < H.size(); ++j) {
        if (!H[j].is_torsion()) throw precondition_error("H_" + std::to_string(j) + "(X_inf; Q) is not finite-dimensional");
        auto T = torsion_action(Q, H[j].factors);
        const auto& h = w.hbar[j];
        if (h.rows() != T.rows() || h.cols() != T.cols())
            throw precondition_error("hbar_" + std::to_string(j) + " must be " + std::to_string(T.rows()) + "x" +
                                     std::to_string(T.rows()));
        if (!inverse(Q, h)) throw precondition_error("hbar_" + std::to_string(j) + " is not invertible over Q");
        auto base = w.sign > 0 ? T : *inverse(Q, T);
        auto rhs = multiply(Q, matrix_power(Q, base, w.k), h);
        out.push_back(multiply(Q, h, T) == rhs);
    }
    return out;
}

}  // namespace cck
