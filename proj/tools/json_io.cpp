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

#include "json_io.hpp"

namespace cck::io {

namespace {

const json& field(const json& j, const std::string& key, const std::string& what) {
    if (!j.is_object()) throw precondition_error(what + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw precondition_error(what + " is missing \"" + key + "\"");
    return *it;
}

const json& array(const json& j, const std::string& what) {
    if (!j.is_array()) throw precondition_error(what + " must be a JSON array");
    return j;
}

template <class T, class Convert>
Matrix<T> to_matrix(const json& j, const std::string& what, const T& zero, Convert convert) {
    const auto rows = to_u64(field(j, "rows", what), what + ".rows");
    const auto cols = to_u64(field(j, "cols", what), what + ".cols");
    const auto& entries = array(field(j, "entries", what), what + ".entries");
    if (entries.size() != rows)
        throw precondition_error(what + " declares " + std::to_string(rows) + " rows but lists " +
                                 std::to_string(entries.size()));
    Matrix<T> m(rows, cols, zero);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = array(entries[i], what + ".entries[" + std::to_string(i) + "]");
        if (row.size() != cols)
            throw precondition_error(what + " row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                     " entries, expected " + std::to_string(cols));
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = convert(row[k], what + "(" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
    return m;
}

template <class T, class Convert>
json from_matrix(const Matrix<T>& m, Convert convert) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(convert(m(i, k)));
        entries.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

std::vector<std::size_t> to_ranks(const json& j, const std::string& what) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < array(j, what).size(); ++i) out.push_back(to_u64(j[i], what));
    return out;
}

json canonicalize(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
    if (j.is_number_float()) throw precondition_error("non-integer number " + j.dump() + " in input");
    if (j.is_array()) {
        json out = json::array();
        for (const auto& x : j) out.push_back(canonicalize(x));
        return out;
    }
    if (j.is_object()) {
        json out = json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = canonicalize(it.value());
        return out;
    }
    return j;
}

}  // namespace

Integer to_integer(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Integer(j.dump());
    if (j.is_string()) {
        try {
            return parse_integer(j.get<std::string>());
        } catch (const precondition_error&) {
        }
    }
    throw precondition_error(what + " must be an integer, got " + j.dump());
}

Rational to_rational(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const precondition_error&) {
        }
    }
    throw precondition_error(what + " must be a rational number, got " + j.dump());
}

std::uint64_t to_u64(const json& j, const std::string& what) {
    auto n = to_integer(j, what);
    if (n < 0 || !n.fits_ulong_p()) throw precondition_error(what + " must be a non-negative machine integer");
    return n.get_ui();
}

long to_long(const json& j, const std::string& what) {
    auto n = to_integer(j, what);
    if (!n.fits_slong_p()) throw precondition_error(what + " is out of range");
    return n.get_si();
}

json from_integer(const Integer& n) { return n.get_str(); }
json from_rational(const Rational& q) { return q.get_str(); }

IntLaurent to_laurent(const json& j, const std::string& what) {
    if (!j.is_object()) return IntLaurent::constant(IntegerRing{}, to_integer(j, what));
    long val = j.contains("val") ? to_long(j["val"], what + ".val") : 0;
    std::vector<Integer> coeffs;
    const auto& c = array(field(j, "coeffs", what), what + ".coeffs");
    for (std::size_t i = 0; i < c.size(); ++i) coeffs.push_back(to_integer(c[i], what + ".coeffs"));
    return IntLaurent(IntegerRing{}, val, std::move(coeffs));
}

json from_laurent(const IntLaurent& p) {
    json coeffs = json::array();
    if (!p.is_zero())
        for (long k = p.valuation(); k <= p.top(); ++k) coeffs.push_back(p.coeff(k).get_str());
    return {{"val", p.valuation()}, {"coeffs", coeffs}};
}

IntMatrix to_int_matrix(const json& j, const std::string& what) {
    return to_matrix<Integer>(j, what, Integer(0), to_integer);
}

RatMatrix to_rat_matrix(const json& j, const std::string& what) {
    return to_matrix<Rational>(j, what, Rational(0), to_rational);
}

IntLaurentMatrix to_laurent_matrix(const json& j, const std::string& what) {
    return to_matrix<IntLaurent>(j, what, IntLaurent(), to_laurent);
}

json from_int_matrix(const IntMatrix& m) {
    return from_matrix(m, [](const Integer& x) { return from_integer(x); });
}

json from_laurent_matrix(const IntLaurentMatrix& m) { return from_matrix(m, from_laurent); }

ModulePresentation to_module(const json& j) {
    auto g = to_u64(field(j, "generators", "module"), "module.generators");
    return ModulePresentation(g, to_laurent_matrix(field(j, "relations", "module"), "module.relations"));
}

TwistedChainComplex to_complex(const json& j) {
    if (j.is_object() && j.contains("boundaries_F")) {
        auto ranks = to_ranks(field(j, "ranks", "mapping torus"), "mapping torus.ranks");
        std::vector<IntMatrix> bd, f;
        const auto& b = array(j["boundaries_F"], "boundaries_F");
        for (std::size_t i = 0; i < b.size(); ++i)
            bd.push_back(to_int_matrix(b[i], "boundaries_F[" + std::to_string(i) + "]"));
        const auto& fj = array(field(j, "f", "mapping torus"), "f");
        for (std::size_t i = 0; i < fj.size(); ++i) f.push_back(to_int_matrix(fj[i], "f[" + std::to_string(i) + "]"));
        return mapping_torus_complex(IntChainComplex(ranks, bd), f);
    }
    auto ranks = to_ranks(field(j, "ranks", "complex"), "complex.ranks");
    std::vector<IntLaurentMatrix> bd;
    const auto& b = array(field(j, "boundaries", "complex"), "complex.boundaries");
    for (std::size_t i = 0; i < b.size(); ++i)
        bd.push_back(to_laurent_matrix(b[i], "boundaries[" + std::to_string(i) + "]"));
    return TwistedChainComplex(ranks, bd);
}

json from_complex(const TwistedChainComplex& X) {
    json bd = json::array();
    for (const auto& d : X.boundaries()) bd.push_back(from_laurent_matrix(d));
    return {{"ranks", X.ranks()}, {"boundaries", bd}};
}

FgAbelianAutomorphism to_automorphism(const json& j, const std::string& what) {
    auto free = to_int_matrix(field(j, "free", what), what + ".free");
    std::vector<Integer> orders;
    if (j.contains("torsion_orders"))
        for (const auto& d : array(j["torsion_orders"], what + ".torsion_orders"))
            orders.push_back(to_integer(d, what + ".torsion_orders"));
    const std::size_t s = orders.size(), r = free.rows();
    auto torsion = j.contains("torsion") ? to_int_matrix(j["torsion"], what + ".torsion") : int_identity(s);
    auto mixing = j.contains("mixing") ? to_int_matrix(j["mixing"], what + ".mixing") : IntMatrix(s, r, 0);
    return FgAbelianAutomorphism(std::move(free), std::move(orders), std::move(torsion), std::move(mixing));
}

json from_hplus_record(const HplusRecord& r) {
    json factors = json::array();
    for (const auto& f : r.factors) factors.push_back(from_integer(f));
    return {{"p", r.p}, {"factors", factors}, {"source", r.source}, {"heuristic", r.heuristic}};
}

std::string canonical(const json& j) { return canonicalize(j).dump(); }

}  // namespace cck::io
