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

#include <string>
#include <utility>
#include <vector>

#include "cck/poly.hpp"

namespace cck {

/// Element t^valuation · body(t) of R[t, t^-1]. The body has a nonzero constant
/// term unless the element is zero, and zero is stored with valuation 0.
template <class Ring>
class LaurentPoly {
   public:
    using Element = typename Ring::Element;

    explicit LaurentPoly(Ring ring = Ring{}) : body_(std::move(ring)) {}
    LaurentPoly(long valuation, Poly<Ring> body) : valuation_(valuation), body_(std::move(body)) { normalize(); }
    /// From a coefficient list starting at t^valuation.
    LaurentPoly(Ring ring, long valuation, std::vector<Element> coeffs)
        : valuation_(valuation), body_(std::move(ring), std::move(coeffs)) {
        normalize();
    }

    static LaurentPoly constant(const Ring& ring, const Element& c) { return LaurentPoly(0, Poly<Ring>::constant(ring, c)); }
    static LaurentPoly monomial(const Ring& ring, const Element& c, long k) {
        return LaurentPoly(k, Poly<Ring>::constant(ring, c));
    }

    const Ring& ring() const { return body_.ring(); }
    long valuation() const { return valuation_; }
    const Poly<Ring>& body() const { return body_; }
    bool is_zero() const { return body_.is_zero(); }
    /// Width of the exponent support; -1 for zero.
    long span() const { return body_.degree(); }
    /// Highest exponent; meaningless for zero.
    long top() const { return valuation_ + body_.degree(); }
    Element coeff(long k) const {
        return k < valuation_ ? ring().zero() : body_.coeff(static_cast<std::size_t>(k - valuation_));
    }
    bool is_unit_monomial() const { return body_.degree() == 0; }

    LaurentPoly shifted(long k) const { return is_zero() ? *this : LaurentPoly(valuation_ + k, body_); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long v = std::min(a.valuation_, b.valuation_);
        return LaurentPoly(v, a.body_.shifted(static_cast<std::size_t>(a.valuation_ - v)) +
                                  b.body_.shifted(static_cast<std::size_t>(b.valuation_ - v)));
    }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly(a.valuation_, -a.body_); }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
        return LaurentPoly(a.valuation_ + b.valuation_, a.body_ * b.body_);
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.valuation_ == b.valuation_ && a.body_ == b.body_;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        if (valuation_ == 0) return body_.str(var);
        return var + "^" + std::to_string(valuation_) + "*(" + body_.str(var) + ")";
    }

   private:
    void normalize() {
        if (body_.is_zero()) {
            valuation_ = 0;
            return;
        }
        std::size_t k = body_.low_degree();
        if (k > 0) {
            body_ = body_.unshifted(k);
            valuation_ += static_cast<long>(k);
        }
    }

    long valuation_ = 0;
    Poly<Ring> body_;
};

using IntLaurent = LaurentPoly<IntegerRing>;

template <class Target, class Source>
LaurentPoly<Target> map_coeffs(const LaurentPoly<Source>& a, const Target& target) {
    return LaurentPoly<Target>(a.valuation(), map_coeffs(a.body(), target));
}

/// f = scale · t^shift · primitive. The primitive part has nonzero constant term
/// and positive leading coefficient; over Z it has content 1 and scale = ±content(f),
/// over Q it is monic. Zero maps to (1, 0, 0).
template <class Ring>
struct LaurentNormalForm {
    typename Ring::Element scale;
    long shift = 0;
    Poly<Ring> primitive;
};

LaurentNormalForm<IntegerRing> laurent_normalize(const IntLaurent& f);
LaurentNormalForm<RationalField> laurent_normalize(const LaurentPoly<RationalField>& f);

/// Canonical associate of a polynomial in k[t, t^-1] over a field: t-power
/// factors stripped, made monic.
template <class Field>
Poly<Field> strip_units(const Poly<Field>& f) {
    if (f.is_zero()) return f;
    return monic(f.unshifted(f.low_degree()));
}

}  // namespace cck
