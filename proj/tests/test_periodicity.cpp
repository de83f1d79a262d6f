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
#include "doctest.h"
#include "generators.hpp"

using namespace cck;
using namespace cck::test;

namespace {

const IntegerRing Z;

// smallest m <= limit with A^m = I and gcd(m, k) = 1, by repeated multiplication
std::uint64_t brute_exponent(const IntMatrix& A, std::uint64_t k, std::uint64_t limit = 1000) {
    IntMatrix cur = A;
    for (std::uint64_t m = 1; m <= limit; ++m) {
        if (is_identity(Z, cur) && gcd_u64(m, k) == 1) return m;
        cur = multiply(Z, cur, A);
    }
    return 0;
}

}  // namespace

TEST_CASE("solve_prop_matrix examples") {
    CHECK(solve_prop_matrix(int_matrix({{0, -1}, {1, 0}}), int_identity(2), 3, -1) == 4);
    CHECK(solve_prop_matrix(int_identity(2), int_identity(2), 2, 1) == 1);
    CHECK_THROWS_AS(solve_prop_matrix(int_matrix({{1, 1}, {0, 1}}), int_identity(2), 2, 1), precondition_error);
    CHECK_THROWS_AS(solve_prop_matrix(int_matrix({{2, 0}, {0, 1}}), int_identity(2), 2, 1), precondition_error);
    CHECK_THROWS_AS(solve_prop_matrix(int_identity(2), int_identity(2), 1, 1), precondition_error);
    // trefoil monodromy: [[0,1],[1,0]] conjugates f^5 = f^-1 back to f
    CHECK(solve_prop_matrix(int_matrix({{1, -1}, {1, 0}}), int_matrix({{0, 1}, {1, 0}}), 5, 1) == 6);
}

TEST_CASE("galois conjugation instances agree with brute force") {
    for (int trial = 0; trial < 60; ++trial) {
        auto inst = random_prop_instance();
        auto m = solve_prop_matrix(inst.A, inst.B, inst.k, inst.sign);
        CHECK(is_identity(Z, matrix_power(Z, inst.A, m)));
        CHECK(gcd_u64(m, inst.k) == 1);
        CHECK(m == brute_exponent(inst.A, inst.k));
    }
}

TEST_CASE("automorphism validation") {
    // ×2 on Z/4 is not injective
    CHECK_THROWS_AS(FgAbelianAutomorphism(IntMatrix(0, 0, 0), {4}, int_matrix({{2}}), IntMatrix(1, 0, 0)),
                    precondition_error);
    // Z/2 → Z/4 needs an even multiplier
    CHECK_THROWS_AS(FgAbelianAutomorphism(IntMatrix(0, 0, 0), {2, 4}, int_matrix({{1, 0}, {1, 1}}), IntMatrix(2, 0, 0)),
                    precondition_error);
    CHECK_NOTHROW(FgAbelianAutomorphism(IntMatrix(0, 0, 0), {2, 4}, int_matrix({{1, 0}, {2, 1}}), IntMatrix(2, 0, 0)));
    CHECK_THROWS_AS(FgAbelianAutomorphism(IntMatrix(0, 0, 0), {4, 2}, int_identity(2), IntMatrix(2, 0, 0)),
                    precondition_error);
    CHECK_THROWS_AS(FgAbelianAutomorphism::on_free(int_matrix({{2}})), precondition_error);
    // swapping the two Z/3 summands is fine; the entries are reduced
    FgAbelianAutomorphism swap(IntMatrix(0, 0, 0), {3, 3}, int_matrix({{3, 4}, {-2, 0}}), IntMatrix(2, 0, 0));
    CHECK(swap.torsion == int_matrix({{0, 1}, {1, 0}}));
}

TEST_CASE("full_order examples") {
    CHECK(full_order(FgAbelianAutomorphism::on_free(int_matrix({{0, -1}, {1, 0}})), 4) == 4);
    CHECK(full_order(FgAbelianAutomorphism::identity(1, {2}), 1) == 1);
    CHECK(full_order(FgAbelianAutomorphism(int_identity(1), {4}, int_matrix({{3}}), IntMatrix(1, 1, 0)), 1) == 2);
    CHECK_THROWS_AS(full_order(FgAbelianAutomorphism::on_free(int_matrix({{0, -1}, {1, 0}})), 2), precondition_error);
    // x ↦ x + y on Z ⊕ Z/5: identity on both layers but of order 5
    FgAbelianAutomorphism shear(int_identity(1), {5}, int_identity(1), int_matrix({{1}}));
    CHECK(full_order(shear, 1) == 5);
}

TEST_CASE("full_order is the exact order on random automorphisms") {
    for (int trial = 0; trial < 40; ++trial) {
        auto inst = random_prop_instance();
        std::vector<Integer> orders;
        const long s = uniform(0, 2);
        long d = uniform(2, 4);
        for (long i = 0; i < s; ++i) orders.emplace_back(d * (i + 1 == s ? uniform(1, 2) : 1));
        // upper unitriangular torsion block with multiplier units, random mixing
        IntMatrix S(static_cast<std::size_t>(s), static_cast<std::size_t>(s), 0);
        for (long i = 0; i < s; ++i) {
            S(i, i) = uniform(0, 1) ? 1 : -1;
            for (long j = i + 1; j < s; ++j) S(i, j) = uniform(-2, 2);
        }
        auto M = random_int_matrix(static_cast<std::size_t>(s), inst.A.rows(), -3, 3);
        FgAbelianAutomorphism phi(inst.A, orders, S, M);
        auto m = solve_prop_matrix(inst.A, inst.B, inst.k, inst.sign);
        auto l = full_order(phi, m);
        CHECK(is_identity(power(phi, l)));
        // oracle: first identity among successive compositions
        auto cur = phi;
        std::uint64_t n = 1;
        while (!is_identity(cur)) {
            cur = compose(cur, phi);
            ++n;
        }
        CHECK(l == n);
    }
}

TEST_CASE("period driver") {
    std::vector<FgAbelianAutomorphism> trefoil{FgAbelianAutomorphism::on_free(int_identity(1)),
                                               FgAbelianAutomorphism::on_free(int_matrix({{1, -1}, {1, 0}}))};
    std::vector<ConjugationWitness> w{{int_identity(1), 1}, {int_matrix({{0, 1}, {1, 0}}), 1}};
    auto r = cor_period_driver(trefoil, 5, w);
    CHECK(r.m == 6);
    CHECK(r.l == 6);
    CHECK(is_identity(Z, matrix_power(Z, trefoil[1].free, 6)));

    std::vector<FgAbelianAutomorphism> ident{FgAbelianAutomorphism::on_free(int_identity(1)),
                                             FgAbelianAutomorphism::on_free(int_identity(2))};
    auto r1 = cor_period_driver(ident, 7, {{int_identity(1), 1}, {int_identity(2), 1}});
    CHECK(r1.m == 1);
    CHECK(r1.l == 1);

    std::vector<FgAbelianAutomorphism> rot{FgAbelianAutomorphism::on_free(int_identity(1)),
                                           FgAbelianAutomorphism::on_free(int_matrix({{0, -1}, {1, 0}}))};
    auto r2 = cor_period_driver(rot, 3, {{int_identity(1), 1}, {int_identity(2), -1}});
    CHECK(r2.m == 4);
    CHECK(r2.l == 4);

    // errors carry the degree
    try {
        cor_period_driver(rot, 2, {{int_identity(1), 1}, {int_identity(2), 1}});
        FAIL("expected an error");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).rfind("degree 1:", 0) == 0);
    }
}
