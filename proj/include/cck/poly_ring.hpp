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

#include "cck/poly.hpp"

namespace cck {

/// Context for the polynomial ring R[t]; Euclidean when R is a field.
template <class Base>
struct PolyRing {
    using Element = Poly<Base>;
    static constexpr bool is_field = false;

    Base base{};

    Element zero() const { return Element(base); }
    Element one() const { return Element::constant(base, base.one()); }
    Element variable() const { return Element::monomial(base, base.one(), 1); }
    Element from(const Integer& n) const { return Element::constant(base, base.from(n)); }
    Element from(long n) const { return Element::constant(base, base.from(n)); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool is_one(const Element& a) const { return a == one(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    Element divexact(const Element& a, const Element& b) const { return cck::divexact(a, b); }
    std::string str(const Element& a) const { return a.str(); }
    std::string name() const { return base.name() + "[t]"; }
    bool operator==(const PolyRing& o) const { return base == o.base; }

    // Euclidean structure (field coefficients only).
    bool size_less(const Element& a, const Element& b) const { return a.degree() < b.degree(); }
    std::pair<Element, Element> divmod(const Element& a, const Element& b) const {
        static_assert(Base::is_field, "Euclidean division needs field coefficients");
        return cck::divmod(a, b);
    }
    bool divides(const Element& b, const Element& a) const {
        if (b.is_zero()) return a.is_zero();
        return divmod(a, b).second.is_zero();
    }
    /// Constant making a monic.
    Element normalizer(const Element& a) const {
        if (a.is_zero()) return one();
        return Element::constant(base, base.inv(a.leading()));
    }
    Element unit_inverse(const Element& u) const { return Element::constant(base, base.inv(u.leading())); }
};

}  // namespace cck
