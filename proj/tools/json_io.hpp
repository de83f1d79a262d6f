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

// JSON encodings of the toolkit's data. Integers travel as decimal strings;
// plain JSON integers are accepted on input.

#include <json.hpp>
#include <string>
#include <vector>

#include "cck/class_numbers.hpp"
#include "cck/covers.hpp"
#include "cck/modules.hpp"
#include "cck/periodicity.hpp"

namespace cck::io {

using json = nlohmann::json;

Integer to_integer(const json& j, const std::string& what);
Rational to_rational(const json& j, const std::string& what);
std::uint64_t to_u64(const json& j, const std::string& what);
long to_long(const json& j, const std::string& what);

json from_integer(const Integer& n);
json from_rational(const Rational& q);

IntLaurent to_laurent(const json& j, const std::string& what);
json from_laurent(const IntLaurent& p);

/// Ascending coefficient list.
template <class Ring>
json from_poly(const Poly<Ring>& p) {
    json out = json::array();
    for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(p.degree(), 0L)) && !p.is_zero(); ++i)
        out.push_back(p.ring().str(p.coeff(i)));
    return out;
}

IntMatrix to_int_matrix(const json& j, const std::string& what);
RatMatrix to_rat_matrix(const json& j, const std::string& what);
IntLaurentMatrix to_laurent_matrix(const json& j, const std::string& what);
json from_int_matrix(const IntMatrix& m);
json from_laurent_matrix(const IntLaurentMatrix& m);

template <class Field>
json from_field_matrix(const Field& F, const MatrixOver<Field>& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(F.str(m(i, k)));
        entries.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ModulePresentation to_module(const json& j);
/// Accepts a twisted complex, or a mapping-torus description with "boundaries_F" and "f".
TwistedChainComplex to_complex(const json& j);
json from_complex(const TwistedChainComplex& X);
FgAbelianAutomorphism to_automorphism(const json& j, const std::string& what);

template <class Field>
json from_cokernel(const CokernelStructure<Field>& c) {
    json factors = json::array();
    for (const auto& f : c.factors) factors.push_back(from_poly(f));
    json out{{"free_rank", c.free_rank}, {"factors", factors}};
    if (c.is_torsion()) out["dimension"] = c.dimension();
    return out;
}

json from_hplus_record(const HplusRecord& r);

/// Numbers rewritten as decimal strings, keys sorted, compact form.
std::string canonical(const json& j);

}  // namespace cck::io
