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

#include "cck/arith.hpp"

#include <algorithm>
#include <numeric>

namespace cck {

Integer parse_integer(const std::string& text) {
    Integer n;
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty() || n.set_str(s, 10) != 0) throw precondition_error("not a decimal integer: '" + text + "'");
    return n;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw precondition_error("zero denominator in '" + text + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

// Pollard rho with Brent's cycle detection; n odd composite.
Integer rho_factor(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        unsigned long r = 1;
        const unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Integer n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = rho_factor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> prime_divisors(const Integer& value) {
    std::vector<Integer> out;
    Integer n = abs(value);
    if (n <= 1) return out;
    for (unsigned long d = 2; d < 100000 && Integer(d) * d <= n; d += (d == 2 ? 1 : 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out.emplace_back(d);
            while (mpz_divisible_ui_p(n.get_mpz_t(), d)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
        }
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Integer> odd_prime_factor(const Integer& n) {
    if (n < 1) throw precondition_error("odd_prime_factor expects a positive integer");
    for (const auto& p : prime_divisors(n))
        if (p != 2) return p;
    return std::nullopt;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace cck
