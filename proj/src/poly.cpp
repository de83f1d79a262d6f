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

#include "cck/poly.hpp"

namespace cck {

Integer content(const IntPoly& a) {
    Integer g = 0;
    for (const auto& c : a.coeffs()) g = gcd(g, c);
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Integer c = content(a);
    if (a.leading() < 0) c = -c;
    std::vector<Integer> v;
    v.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) v.push_back(IntegerRing{}.divexact(x, c));
    return IntPoly(IntegerRing{}, std::move(v));
}

IntPoly integer_primitive(const RatPoly& a) {
    Integer den = 1;
    for (const auto& c : a.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.push_back(c.get_num() * (den / c.get_den()));
    return primitive_part(IntPoly(IntegerRing{}, std::move(v)));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b).scaled(content(b));
    if (b.is_zero()) return primitive_part(a).scaled(content(a));
    RationalField Q;
    auto g = gcd(map_coeffs(a, Q), map_coeffs(b, Q));
    return integer_primitive(g).scaled(gcd(content(a), content(b)));
}

namespace {

int mobius(std::size_t n) {
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

IntPoly cyclotomic(std::size_t n) {
    if (n == 0) throw precondition_error("cyclotomic polynomial index must be positive");
    IntegerRing Z;
    IntPoly num = IntPoly::constant(Z, 1), den = IntPoly::constant(Z, 1);
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 1) num *= IntPoly::binomial(Z, d, 1);
        else if (mu == -1) den *= IntPoly::binomial(Z, d, 1);
    }
    return divexact(num, den);
}

std::optional<IntPoly> as_integer_poly(const RatPoly& a) {
    std::vector<Integer> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        if (c.get_den() != 1) return std::nullopt;
        v.push_back(c.get_num());
    }
    return IntPoly(IntegerRing{}, std::move(v));
}

}  // namespace cck
