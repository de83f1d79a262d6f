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
#include <initializer_list>
#include <random>
#include <vector>

#include "cck/laurent.hpp"
#include "cck/matrix.hpp"
#include "cck/poly.hpp"

namespace cck::test {

inline IntPoly ip(std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(IntegerRing{}, std::move(v));
}

inline RatPoly rp(std::initializer_list<Rational> c) { return RatPoly(RationalField{}, std::vector<Rational>(c)); }

inline FpPoly fp(const PrimeField& F, std::initializer_list<long> c) {
    std::vector<std::uint64_t> v;
    for (long x : c) v.push_back(F.from(x));
    return FpPoly(F, std::move(v));
}

/// Laurent polynomial over Z with coefficients starting at t^val.
inline IntLaurent il(long val, std::initializer_list<long> c) {
    std::vector<Integer> v;
    for (long x : c) v.emplace_back(x);
    return IntLaurent(IntegerRing{}, val, std::move(v));
}

inline Matrix<IntLaurent> laurent_matrix(std::initializer_list<std::initializer_list<IntLaurent>> rows) {
    std::vector<std::vector<IntLaurent>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return Matrix<IntLaurent>::FromRows(v, IntLaurent());
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234ULL);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntMatrix random_int_matrix(std::size_t r, std::size_t c, long lo, long hi) {
    IntMatrix m(r, c, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
}

/// Random unimodular integer matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::size_t n, int steps = 6, long range = 2) {
    IntMatrix m = int_identity(n);
    if (n < 2) {
        if (n == 1 && uniform(0, 1)) m(0, 0) = -1;
        return m;
    }
    for (int s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        long c = uniform(-range, range);
        for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
    }
    return m;
}

}  // namespace cck::test
