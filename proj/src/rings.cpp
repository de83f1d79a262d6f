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

#include "cck/rings.hpp"

#include <limits>

namespace cck {

PrimeField::PrimeField(const Integer& p) {
    if (p < 2 || !is_probable_prime(p)) throw precondition_error("F_p requires a prime p, got " + p.get_str());
    if (p > Integer(std::numeric_limits<unsigned long>::max()) || !p.fits_ulong_p())
        throw precondition_error("prime " + p.get_str() + " exceeds the 64-bit word size");
    p_ = p.get_ui();
}

PrimeField::Element PrimeField::from(const Integer& n) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
    return r.get_ui();
}

PrimeField::Element PrimeField::from(long n) const { return from(Integer(n)); }

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw consistency_error("division by zero in " + name());
    // extended Euclid on signed 128-bit values
    __int128 r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (s0 < 0) s0 += p_;
    return static_cast<Element>(s0);
}

}  // namespace cck
