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

#include "cck/laurent.hpp"

namespace cck {

LaurentNormalForm<IntegerRing> laurent_normalize(const IntLaurent& f) {
    IntegerRing Z;
    if (f.is_zero()) return {1, 0, IntPoly(Z)};
    Integer c = content(f.body());
    if (f.body().leading() < 0) c = -c;
    return {c, f.valuation(), primitive_part(f.body())};
}

LaurentNormalForm<RationalField> laurent_normalize(const LaurentPoly<RationalField>& f) {
    RationalField Q;
    if (f.is_zero()) return {1, 0, RatPoly(Q)};
    return {f.body().leading(), f.valuation(), monic(f.body())};
}

}  // namespace cck
