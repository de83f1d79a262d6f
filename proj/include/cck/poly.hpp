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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cck/arith.hpp"
#include "cck/rings.hpp"

namespace cck {

/// Dense univariate polynomial over a coefficient ring; coefficient i multiplies t^i.
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
template <class Ring>
class Poly {
   public:
    using Element = typename Ring::Element;

    explicit Poly(Ring ring = Ring{}) : ring_(std::move(ring)) {}
    Poly(Ring ring, std::vector<Element> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const Ring& ring, const Element& c) { return Poly(ring, {c}); }
    static Poly monomial(const Ring& ring, const Element& c, std::size_t k) {
        std::vector<Element> v(k + 1, ring.zero());
        v[k] = c;
        return Poly(ring, std::move(v));
    }
    /// t^k - c
    static Poly binomial(const Ring& ring, std::size_t k, const Element& c) {
        std::vector<Element> v(k + 1, ring.zero());
        v[k] = ring.one();
        v[0] = ring.sub(v[0], c);
        return Poly(ring, std::move(v));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Element>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
    const Element& leading() const { return c_.back(); }
    Element trailing() const { return c_.empty() ? ring_.zero() : c_.front(); }
    /// Multiplicity of t as a factor (0 for the zero polynomial).
    std::size_t low_degree() const {
        std::size_t k = 0;
        while (k < c_.size() && ring_.is_zero(c_[k])) ++k;
        return c_.empty() ? 0 : k;
    }
    bool is_monic() const { return !c_.empty() && ring_.is_one(c_.back()); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ring_.add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ring_.sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& x : a.c_) x = a.ring_.neg(x);
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
        std::vector<Element> r(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.ring_.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = a.ring_.add(r[i + j], a.ring_.mul(a.c_[i], b.c_[j]));
        }
        return Poly(a.ring_, std::move(r));
    }
    Poly scaled(const Element& s) const {
        Poly r(ring_, c_);
        for (auto& x : r.c_) x = ring_.mul(x, s);
        r.trim();
        return r;
    }
    /// Multiply by t^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<Element> v(k, ring_.zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(ring_, std::move(v));
    }
    /// Divide by t^k; the low k coefficients must vanish.
    Poly unshifted(std::size_t k) const {
        if (is_zero()) return *this;
        return Poly(ring_, std::vector<Element>(c_.begin() + static_cast<long>(std::min(k, c_.size())), c_.end()));
    }
    /// t^deg · p(1/t)
    Poly reversed() const {
        std::vector<Element> v(c_.rbegin(), c_.rend());
        return Poly(ring_, std::move(v));
    }
    Element evaluate(const Element& x) const {
        Element acc = ring_.zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = ring_.add(ring_.mul(acc, x), *it);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.ring_.equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (ring_.is_zero(c_[k])) continue;
            std::string s = ring_.str(c_[k]);
            bool negative = !s.empty() && s[0] == '-';
            if (negative) s.erase(0, 1);
            if (!first) os << (negative ? " - " : " + ");
            else if (negative) os << "-";
            if (k == 0 || s != "1") os << s << (k > 0 ? "*" : "");
            if (k > 0) os << var;
            if (k > 1) os << "^" << k;
            first = false;
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
    }

    Ring ring_;
    std::vector<Element> c_;
};

using IntPoly = Poly<IntegerRing>;
using RatPoly = Poly<RationalField>;
using FpPoly = Poly<PrimeField>;

/// Quotient and remainder over a field.
template <class Field>
std::pair<Poly<Field>, Poly<Field>> divmod(const Poly<Field>& a, const Poly<Field>& b) {
    static_assert(Field::is_field, "divmod needs field coefficients");
    const Field& F = a.ring();
    if (b.is_zero()) throw consistency_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<Field>(F), a};
    std::vector<typename Field::Element> r = a.coeffs();
    std::vector<typename Field::Element> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), F.zero());
    const auto inv_lead = F.inv(b.leading());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        auto c = F.mul(r[k + db], inv_lead);
        q[k] = c;
        if (F.is_zero(c)) continue;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] = F.sub(r[k + i], F.mul(c, b.coeffs()[i]));
    }
    return {Poly<Field>(F, std::move(q)), Poly<Field>(F, std::move(r))};
}

/// Exact quotient a / b for polynomials over an integral domain; throws when inexact.
template <class Ring>
Poly<Ring> divexact(const Poly<Ring>& a, const Poly<Ring>& b) {
    const Ring& R = a.ring();
    if (b.is_zero()) throw consistency_error("polynomial division by zero");
    if (a.is_zero()) return a;
    if (a.degree() < b.degree()) throw consistency_error("inexact polynomial division");
    std::vector<typename Ring::Element> r = a.coeffs();
    std::vector<typename Ring::Element> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), R.zero());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = q.size(); k-- > 0;) {
        if (R.is_zero(r[k + db])) continue;
        auto c = R.divexact(r[k + db], b.leading());
        q[k] = c;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] = R.sub(r[k + i], R.mul(c, b.coeffs()[i]));
    }
    for (const auto& x : r)
        if (!R.is_zero(x)) throw consistency_error("inexact polynomial division");
    return Poly<Ring>(R, std::move(q));
}

template <class Field>
Poly<Field> monic(const Poly<Field>& a) {
    if (a.is_zero()) return a;
    return a.scaled(a.ring().inv(a.leading()));
}

/// Monic greatest common divisor over a field; gcd(0, 0) = 0.
template <class Field>
Poly<Field> gcd(Poly<Field> a, Poly<Field> b) {
    static_assert(Field::is_field, "gcd needs field coefficients");
    if (!(a.ring() == b.ring())) throw precondition_error("gcd of polynomials over different rings");
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Extended gcd over a field: returns (g, s, u) with s·a + u·b = g, g monic.
template <class Field>
std::tuple<Poly<Field>, Poly<Field>, Poly<Field>> xgcd(const Poly<Field>& a, const Poly<Field>& b) {
    const Field& F = a.ring();
    Poly<Field> r0 = a, r1 = b;
    Poly<Field> s0 = Poly<Field>::constant(F, F.one()), s1(F);
    Poly<Field> u0(F), u1 = Poly<Field>::constant(F, F.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {r0, s0, u0};
    auto inv = F.inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), u0.scaled(inv)};
}

/// Apply a coefficient map into another ring.
template <class Target, class Source>
Poly<Target> map_coeffs(const Poly<Source>& a, const Target& target) {
    std::vector<typename Target::Element> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.push_back(target.from(c));
    return Poly<Target>(target, std::move(v));
}

/// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
Integer content(const IntPoly& a);
/// a / content(a) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& a);
/// Scale a rational polynomial to a primitive integer polynomial with positive leading coefficient.
IntPoly integer_primitive(const RatPoly& a);
/// gcd in Z[t], normalised to positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// The n-th cyclotomic polynomial.
IntPoly cyclotomic(std::size_t n);

/// If every coefficient is an integer, the polynomial over Z.
std::optional<IntPoly> as_integer_poly(const RatPoly& a);

}  // namespace cck
