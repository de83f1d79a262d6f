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

#include "doctest.h"
#include "support.hpp"

using namespace cck;
using namespace cck::test;

TEST_CASE("poly_gcd over Q") {
    RationalField Q;
    SUBCASE("common factor") {
        CHECK(gcd(rp({-1, 0, 1}), rp({-1, 1})) == rp({-1, 1}));
    }
    SUBCASE("gcd with zero is the monic input") {
        CHECK(gcd(rp({4, 0, 2}), RatPoly(Q)) == rp({2, 0, 1}));
        CHECK(gcd(RatPoly(Q), RatPoly(Q)).is_zero());
    }
    SUBCASE("t^2 - t + 1 divides t^3 + 1") {
        // division oracle: t^3 + 1 = (t + 1)(t^2 - t + 1)
        CHECK(rp({1, 1}) * rp({1, -1, 1}) == rp({1, 0, 0, 1}));
        CHECK(gcd(rp({1, -1, 1}), rp({1, 0, 0, 1})) == rp({1, -1, 1}));
    }
}

TEST_CASE("poly_gcd over F_p") {
    PrimeField F(5);
    auto g = gcd(fp(F, {-1, 0, 1}), fp(F, {1, 1}));
    CHECK(g == fp(F, {1, 1}));
    CHECK_THROWS_AS(gcd(fp(F, {1, 1}), fp(PrimeField(7), {1, 1})), precondition_error);
}

TEST_CASE("gcd divides both inputs (random property)") {
    RationalField Q;
    for (int trial = 0; trial < 200; ++trial) {
        auto rnd = [&](int deg) {
            std::vector<Rational> v;
            for (int i = 0; i <= deg; ++i) v.emplace_back(uniform(-4, 4));
            return RatPoly(Q, v);
        };
        auto common = rnd(static_cast<int>(uniform(0, 2)));
        auto a = rnd(static_cast<int>(uniform(0, 3))) * common;
        auto b = rnd(static_cast<int>(uniform(0, 3))) * common;
        auto g = gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(g.is_monic());
        CHECK(divmod(a, g).second.is_zero());
        CHECK(divmod(b, g).second.is_zero());
        if (!common.is_zero()) CHECK(divmod(g, monic(common)).second.is_zero());
        auto [h, s, u] = xgcd(a, b);
        CHECK(h == g);
        CHECK(s * a + u * b == g);
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == ip({-1, 1}));
    CHECK(cyclotomic(2) == ip({1, 1}));
    // exact division oracle: (t^6 - 1) / (Φ1 Φ2 Φ3)
    auto quotient = divexact(ip({-1, 0, 0, 0, 0, 0, 1}), ip({-1, 1}) * ip({1, 1}) * ip({1, 1, 1}));
    CHECK(quotient == ip({1, -1, 1}));
    CHECK(cyclotomic(6) == quotient);
    CHECK_THROWS_AS(cyclotomic(0), precondition_error);
}

TEST_CASE("product of Φ_d over d | n is t^n - 1 for n <= 200") {
    IntegerRing Z;
    for (std::size_t n = 1; n <= 200; ++n) {
        IntPoly prod = IntPoly::constant(Z, 1);
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        REQUIRE(prod == IntPoly::binomial(Z, n, 1));
    }
}

TEST_CASE("laurent_normalize") {
    RationalField Q;
    SUBCASE("-2t^3 + 2t^2 over Q") {
        LaurentPoly<RationalField> f(Q, 2, {2, -2});
        auto nf = laurent_normalize(f);
        CHECK(nf.scale == -2);
        CHECK(nf.shift == 2);
        CHECK(nf.primitive == rp({-1, 1}));
    }
    SUBCASE("-2t^3 + 2t^2 over Z keeps the content in the scale") {
        auto nf = laurent_normalize(il(2, {2, -2}));
        CHECK(nf.scale == -2);
        CHECK(nf.shift == 2);
        CHECK(nf.primitive == ip({-1, 1}));
    }
    SUBCASE("zero") {
        auto nf = laurent_normalize(IntLaurent());
        CHECK(nf.scale == 1);
        CHECK(nf.shift == 0);
        CHECK(nf.primitive.is_zero());
    }
    SUBCASE("t^-1") {
        auto nf = laurent_normalize(il(-1, {1}));
        CHECK(nf.scale == 1);
        CHECK(nf.shift == -1);
        CHECK(nf.primitive == ip({1}));
    }
}

TEST_CASE("laurent_normalize is invariant under units ±t^i") {
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> c;
        for (int i = 0, n = static_cast<int>(uniform(1, 5)); i < n; ++i) c.emplace_back(uniform(-6, 6));
        IntLaurent f(IntegerRing{}, uniform(-3, 3), c);
        IntLaurent unit = il(uniform(-4, 4), {uniform(0, 1) ? 1 : -1});
        auto a = laurent_normalize(f);
        auto b = laurent_normalize(unit * f);
        CHECK(a.primitive == b.primitive);
        CHECK(abs(a.scale) == abs(b.scale));
        // idempotent
        auto again = laurent_normalize(IntLaurent(0, a.primitive));
        CHECK(again.primitive == a.primitive);
        if (!f.is_zero()) {
            CHECK(content(a.primitive) == 1);
            CHECK(a.primitive.leading() > 0);
            CHECK(a.primitive.trailing() != 0);
        }
    }
}

TEST_CASE("Laurent arithmetic keeps the canonical zero") {
    auto f = il(-2, {1, 3});
    CHECK((f - f).is_zero());
    CHECK((f - f).valuation() == 0);
    CHECK((f * il(3, {1})).valuation() == 1);
    CHECK(il(1, {0, 0, 5}).valuation() == 3);
}

TEST_CASE("prime fields") {
    CHECK_THROWS_AS(PrimeField(Integer(4)), precondition_error);
    CHECK_THROWS_AS(PrimeField(Integer("18446744073709551629")), precondition_error);  // prime > 2^64
    PrimeField big(Integer("18446744073709551557"));  // largest 64-bit prime
    auto a = big.from(Integer(-1));
    CHECK(big.mul(a, a) == 1);
    CHECK(big.mul(big.inv(12345), 12345) == 1);
    CHECK(big.add(a, 2) == 1);
}

TEST_CASE("odd_prime_factor") {
    CHECK_FALSE(odd_prime_factor(1).has_value());
    CHECK_FALSE(odd_prime_factor(64).has_value());
    CHECK(*odd_prime_factor(12) == 3);
    // trial-division oracle: 853513 = 67 · 12739
    CHECK(Integer(67) * 12739 == 853513);
    CHECK(*odd_prime_factor(853513) == 67);
    // a product of two large primes exercises the rho path
    Integer big = Integer("612771091") * Integer("36733950669733713761");
    CHECK(*odd_prime_factor(big) == Integer("612771091"));
    CHECK_THROWS_AS(odd_prime_factor(0), precondition_error);
}
