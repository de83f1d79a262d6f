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

#include "cck/periodicity.hpp"

#include "cck/linalg.hpp"
#include "cck/normal_forms.hpp"
#include "cck/smith.hpp"

namespace cck {

namespace {

const IntegerRing Z;

// Entries of row i reduced into [0, d_i).
void reduce_rows(IntMatrix& m, const std::vector<Integer>& d) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Integer r = m(i, j) % d[i];
            if (r < 0) r += d[i];
            m(i, j) = r;
        }
}

bool is_unimodular(const IntMatrix& A) {
    if (!A.is_square()) return false;
    auto det = determinant(Z, A);
    return det == 1 || det == -1;
}

IntMatrix integer_inverse(const IntMatrix& A) {
    RationalField Q;
    auto inv = inverse(Q, A.map([](const Integer& x) { return Rational(x); }));
    if (!inv) throw precondition_error("matrix is not invertible");
    return inv->map([](const Rational& x) {
        if (x.get_den() != 1) throw precondition_error("matrix is not invertible over Z");
        return Integer(x.get_num());
    });
}

std::string shape(const IntMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

FgAbelianAutomorphism::FgAbelianAutomorphism(IntMatrix free_block, std::vector<Integer> orders, IntMatrix torsion_block,
                                             IntMatrix mixing_block)
    : free(std::move(free_block)),
      torsion_orders(std::move(orders)),
      torsion(std::move(torsion_block)),
      mixing(std::move(mixing_block)) {
    const std::size_t r = free.rows(), s = torsion_orders.size();
    if (!free.is_square()) throw precondition_error("free block must be square, got " + shape(free));
    if (torsion.rows() != s || torsion.cols() != s)
        throw precondition_error("torsion block must be " + std::to_string(s) + "x" + std::to_string(s) + ", got " +
                                 shape(torsion));
    if (mixing.rows() != s || mixing.cols() != r)
        throw precondition_error("mixing block must be " + std::to_string(s) + "x" + std::to_string(r) + ", got " +
                                 shape(mixing));
    for (std::size_t i = 0; i < s; ++i) {
        if (torsion_orders[i] < 2) throw precondition_error("torsion orders must be at least 2");
        if (i > 0 && torsion_orders[i] % torsion_orders[i - 1] != 0)
            throw precondition_error("torsion orders must form a divisibility chain");
    }
    if (!is_unimodular(free)) throw precondition_error("free block is not invertible over Z");
    // Z/d_j → Z/d_i, x ↦ S_ij x is defined iff d_i | S_ij d_j
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if ((torsion(i, j) * torsion_orders[j]) % torsion_orders[i] != 0)
                throw precondition_error("torsion block entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") is not a homomorphism Z/" + torsion_orders[j].get_str() + " → Z/" +
                                         torsion_orders[i].get_str());
    reduce_rows(torsion, torsion_orders);
    reduce_rows(mixing, torsion_orders);
    // on a finite group, surjective = bijective: S·Z^s + diag(d)·Z^s = Z^s
    if (s > 0) {
        IntMatrix diag(s, s, 0);
        for (std::size_t i = 0; i < s; ++i) diag(i, i) = torsion_orders[i];
        auto snf = smith_normal_form(Z, hconcat(torsion, diag));
        bool unit = snf.rank == s;
        for (const auto& f : snf.invariant_factors()) unit = unit && f == 1;
        if (!unit) throw precondition_error("torsion block is not invertible on the torsion subgroup");
    }
}

FgAbelianAutomorphism FgAbelianAutomorphism::identity(std::size_t r, std::vector<Integer> orders) {
    const std::size_t s = orders.size();
    return FgAbelianAutomorphism(int_identity(r), std::move(orders), int_identity(s), IntMatrix(s, r, 0));
}

FgAbelianAutomorphism FgAbelianAutomorphism::on_free(IntMatrix free_block) {
    const std::size_t r = free_block.rows();
    return FgAbelianAutomorphism(std::move(free_block), {}, IntMatrix(0, 0, 0), IntMatrix(0, r, 0));
}

FgAbelianAutomorphism compose(const FgAbelianAutomorphism& phi, const FgAbelianAutomorphism& psi) {
    if (phi.free_rank() != psi.free_rank() || phi.torsion_orders != psi.torsion_orders)
        throw precondition_error("automorphisms act on different groups");
    FgAbelianAutomorphism out;
    out.torsion_orders = phi.torsion_orders;
    out.free = multiply(Z, phi.free, psi.free);
    out.mixing = multiply(Z, phi.mixing, psi.free) + multiply(Z, phi.torsion, psi.mixing);
    out.torsion = multiply(Z, phi.torsion, psi.torsion);
    reduce_rows(out.mixing, out.torsion_orders);
    reduce_rows(out.torsion, out.torsion_orders);
    return out;
}

FgAbelianAutomorphism power(const FgAbelianAutomorphism& phi, std::uint64_t e) {
    auto result = FgAbelianAutomorphism::identity(phi.free_rank(), phi.torsion_orders);
    auto base = phi;
    while (e > 0) {
        if (e & 1) result = compose(result, base);
        e >>= 1;
        if (e > 0) base = compose(base, base);
    }
    return result;
}

bool is_identity(const FgAbelianAutomorphism& phi) {
    return is_identity(Z, phi.free) && is_identity(Z, phi.torsion) && is_zero_matrix(Z, phi.mixing);
}

std::uint64_t solve_prop_matrix(const IntMatrix& A, const IntMatrix& B, std::uint64_t k, int sign) {
    if (k < 2) throw precondition_error("k must exceed 1");
    if (sign != 1 && sign != -1) throw precondition_error("sign must be +1 or -1");
    if (!A.is_square() || B.rows() != A.rows() || B.cols() != A.cols())
        throw precondition_error("A and B must be square of the same size");
    if (!is_unimodular(A)) throw precondition_error("|det A| != 1");
    if (!is_unimodular(B)) throw precondition_error("|det B| != 1");
    auto rhs = sign > 0 ? A : integer_inverse(A);
    // B A^k B^-1 = A^sign  ⇔  B A^k = A^sign B
    if (!(multiply(Z, B, matrix_power(Z, A, k)) == multiply(Z, rhs, B)))
        throw precondition_error("relation B A^k B^-1 = A^" + std::to_string(sign) + " does not hold");
    auto order = finite_order(A);
    if (!order) throw consistency_error("A has infinite order although the conjugation relation holds");
    // every m with A^m = I is a multiple of the order
    if (gcd_u64(*order, k) != 1)
        throw consistency_error("order " + std::to_string(*order) + " of A is not prime to k = " + std::to_string(k));
    if (!is_identity(Z, matrix_power(Z, A, *order))) throw consistency_error("A^m != I after solving");
    return *order;
}

std::uint64_t torsion_order(const FgAbelianAutomorphism& phi) {
    constexpr std::uint64_t kMaxSteps = 1000000;
    const std::size_t s = phi.torsion_count();
    if (s == 0) return 1;
    IntMatrix cur = phi.torsion;
    for (std::uint64_t n = 1; n <= kMaxSteps; ++n) {
        if (is_identity(Z, cur)) return n;
        cur = multiply(Z, cur, phi.torsion);
        reduce_rows(cur, phi.torsion_orders);
    }
    throw precondition_error("torsion automorphism order exceeds " + std::to_string(kMaxSteps));
}

std::uint64_t full_order(const FgAbelianAutomorphism& phi, std::uint64_t m_free) {
    if (m_free < 1) throw precondition_error("m_free must be positive");
    if (!is_identity(Z, matrix_power(Z, phi.free, m_free)))
        throw precondition_error("free block to the power " + std::to_string(m_free) + " is not the identity");
    // φ^(m s) = (I, N, I) is unipotent, so (φ^(m s))^e = (I, e N, I) = id
    const std::uint64_t s = torsion_order(phi);
    std::uint64_t e = 1;
    if (!phi.torsion_orders.empty()) {
        const auto& d = phi.torsion_orders.back();
        if (!d.fits_ulong_p()) throw precondition_error("torsion exponent too large");
        e = d.get_ui();
    }
    const std::uint64_t bound = m_free * s * e;
    for (auto l : divisors(bound))
        if (is_identity(power(phi, l))) return l;
    throw consistency_error("φ^" + std::to_string(bound) + " is not the identity");
}

PeriodResult cor_period_driver(const std::vector<FgAbelianAutomorphism>& monodromy, std::uint64_t k,
                               const std::vector<ConjugationWitness>& witnesses) {
    if (witnesses.size() != monodromy.size())
        throw precondition_error("expected one conjugation witness per degree (" + std::to_string(monodromy.size()) +
                                 "), got " + std::to_string(witnesses.size()));
    PeriodResult out;
    for (std::size_t j = 0; j < monodromy.size(); ++j) {
        const std::string where = "degree " + std::to_string(j) + ": ";
        try {
            const auto& phi = monodromy[j];
            std::uint64_t m = 1;
            if (phi.free_rank() > 0) m = solve_prop_matrix(phi.free, witnesses[j].B, k, witnesses[j].sign);
            std::uint64_t l = full_order(phi, m);
            out.m_per_degree.push_back(m);
            out.l_per_degree.push_back(l);
            out.m = lcm_u64(out.m, m);
            out.l = lcm_u64(out.l, l);
        } catch (const precondition_error& e) {
            throw precondition_error(where + e.what());
        } catch (const consistency_error& e) {
            throw consistency_error(where + e.what());
        }
    }
    for (std::size_t j = 0; j < monodromy.size(); ++j) {
        if (!is_identity(Z, matrix_power(Z, monodromy[j].free, out.m)) || !is_identity(power(monodromy[j], out.l)))
            throw consistency_error("degree " + std::to_string(j) + ": aggregated period fails verification");
    }
    if (gcd_u64(out.m, k) != 1) throw consistency_error("aggregated m is not prime to k");
    return out;
}

}  // namespace cck
