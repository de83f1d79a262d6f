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
#include <string>
#include <utility>

#include "cck/arith.hpp"

namespace cck {

// Coefficient rings are passed around as small context objects. Elements are
// plain values; all arithmetic goes through the context so that F_p elements
// stay machine words and the modulus lives in one place.

struct IntegerRing {
    using Element = Integer;
    static constexpr bool is_field = false;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from(const Integer& n) const { return n; }
    Element from(long n) const { return n; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    bool is_zero(const Element& a) const { return a == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    /// Exact quotient; throws when b does not divide a.
    Element divexact(const Element& a, const Element& b) const {
        if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            throw consistency_error("inexact integer division");
        Element q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    bool divides(const Element& b, const Element& a) const {
        return b == 0 ? a == 0 : mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
    }
    std::string str(const Element& a) const { return a.get_str(); }
    std::string name() const { return "Z"; }

    // Euclidean structure: size is |a|, remainders are balanced (|r| <= |b|/2).
    bool size_less(const Element& a, const Element& b) const { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }
    std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
        Element q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (2 * abs(r) > abs(b)) {
            r -= b;
            q += 1;
        }
        return {q, r};
    }
    /// Unit u such that u·a is the canonical (nonnegative) associate.
    Element normalizer(const Element& a) const { return a < 0 ? -1 : 1; }
    Element unit_inverse(const Element& u) const { return u; }
    bool operator==(const IntegerRing&) const { return true; }
};

struct RationalField {
    using Element = Rational;
    static constexpr bool is_field = true;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from(const Integer& n) const { return Rational(n); }
    Element from(long n) const { return n; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (a == 0) throw consistency_error("division by zero in Q");
        return 1 / a;
    }
    Element divexact(const Element& a, const Element& b) const { return mul(a, inv(b)); }
    bool is_zero(const Element& a) const { return a == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    std::string str(const Element& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const { return true; }
};

/// The prime field F_p for a word-size prime p.
class PrimeField {
   public:
    using Element = std::uint64_t;
    static constexpr bool is_field = true;

    /// Throws precondition_error unless p is a prime below 2^64.
    explicit PrimeField(const Integer& p);
    explicit PrimeField(std::uint64_t p) : PrimeField(Integer(static_cast<unsigned long>(p))) {}

    std::uint64_t characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from(const Integer& n) const;
    Element from(long n) const;
    Element add(Element a, Element b) const {
        unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
        return static_cast<Element>(s >= p_ ? s - p_ : s);
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<unsigned __int128>(a) * b % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const;
    Element divexact(Element a, Element b) const { return mul(a, inv(b)); }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    bool equal(Element a, Element b) const { return a == b; }
    std::string str(Element a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p_); }
    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

   private:
    std::uint64_t p_;
};

}  // namespace cck
