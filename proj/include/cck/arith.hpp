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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cck {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an input violates an operation's stated precondition.
class precondition_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when two independent computations that must agree do not.
class consistency_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool is_probable_prime(const Integer& n);

/// Distinct prime divisors of |n| in increasing order; empty for 0 and ±1.
std::vector<Integer> prime_divisors(const Integer& n);

/// Smallest odd prime dividing n, or nullopt when n is a power of two.
std::optional<Integer> odd_prime_factor(const Integer& n);

/// Divisors of a positive machine integer, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Euler's totient of a positive machine integer.
std::uint64_t euler_phi(std::uint64_t n);

}  // namespace cck
