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

#include "cck/class_numbers.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cck/linalg.hpp"
#include "cck/poly.hpp"
#include "cck/rings.hpp"

namespace cck {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    for (a %= m; e; e >>= 1, a = mulmod(a, a, m))
        if (e & 1) r = mulmod(r, a, m);
    return r;
}

std::uint64_t primitive_root(std::uint64_t p) {
    auto qs = prime_divisors(Integer(std::to_string(p - 1)));
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (const auto& q : qs) ok = ok && powmod(g, (p - 1) / q.get_ui(), p) != 1;
        if (ok) return g;
    }
}

void check_range(std::uint64_t p) {
    if (p < 3 || !is_probable_prime(Integer(std::to_string(p))))
        throw precondition_error("p = " + std::to_string(p) + " is not an odd prime");
    auto bound = class_number_prime_bound();
    if (p > bound)
        throw precondition_error("p = " + std::to_string(p) + " exceeds the prime bound " + std::to_string(bound) +
                                 " (set CCK_PRIME_BOUND to raise it)");
}

// a·b in Z[x]/(modulus), modulus monic
IntPoly mulmod_poly(const IntPoly& a, const IntPoly& b, const IntPoly& modulus) {
    auto prod = a * b;
    std::vector<Integer> c(prod.coeffs().begin(), prod.coeffs().end());
    const std::size_t d = static_cast<std::size_t>(modulus.degree());
    for (std::size_t i = c.size(); i-- > d;) {
        if (c[i] == 0) continue;
        Integer lead = c[i];
        for (std::size_t k = 0; k <= d; ++k) c[i - d + k] -= lead * modulus.coeff(k);
    }
    c.resize(std::min(c.size(), d));
    return IntPoly(IntegerRing{}, std::move(c));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::uint64_t class_number_prime_bound() {
    if (const char* env = std::getenv("CCK_PRIME_BOUND")) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw precondition_error(std::string("CCK_PRIME_BOUND is not a positive integer: ") + env);
    }
    return 211;
}

Integer hp_minus_character(std::uint64_t p) {
    check_range(p);
    const std::uint64_t n = p - 1, half = n / 2;
    // S(x) = sum_a a·x^ind(a); χ_j(a) = ζ^(j·ind(a)) for odd j gives S(ζ^j) = p·B_{1,χ_j}
    const auto g = primitive_root(p);
    std::vector<Integer> S(n);
    for (std::uint64_t e = 0, a = 1; e < n; ++e, a = mulmod(a, g, p)) S[e] = Integer(std::to_string(a));
    const auto phi = cyclotomic(n);
    IntPoly prod = IntPoly::constant(IntegerRing{}, 1);
    for (std::uint64_t j = 1; j < n; j += 2) {
        std::vector<Integer> c(n);
        for (std::uint64_t e = 0; e < n; ++e) c[(e * j) % n] += S[e];
        prod = mulmod_poly(prod, IntPoly(IntegerRing{}, std::move(c)), phi);
    }
    if (prod.degree() > 0) throw consistency_error("product of odd character sums is not rational");
    // h = 2p · prod_j (-S_j / (2p)) = (-1)^half · prod / (2p)^(half-1)
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2 * p, half - 1);
    Integer value = prod.coeff(0);
    if (half % 2) value = -value;
    if (value % denom != 0) throw consistency_error("character product is not divisible by (2p)^((p-3)/2)");
    Integer h = value / denom;
    if (h <= 0) throw consistency_error("character product gives a non-positive class number");
    return h;
}

Integer hp_minus_maillet(std::uint64_t p) {
    check_range(p);
    const std::uint64_t half = (p - 1) / 2;
    if (half == 1) return 1;  // the 1x1 determinant [1] carries no information
    IntegerRing Z;
    IntMatrix M(half, half, 0);
    for (std::uint64_t b = 1; b <= half; ++b) {
        auto binv = powmod(b, p - 2, p);
        for (std::uint64_t a = 1; a <= half; ++a) M(a - 1, b - 1) = static_cast<unsigned long>(mulmod(a, binv, p));
    }
    Integer det = determinant(Z, M);
    Integer ppow;
    mpz_ui_pow_ui(ppow.get_mpz_t(), p, half - 1);
    if (det % ppow != 0) throw consistency_error("Maillet determinant is not divisible by p^((p-3)/2)");
    Integer h = det / ppow;
    if (half % 2 == 0) h = -h;  // -(-1)^half
    if (h <= 0) throw consistency_error("Maillet determinant has the wrong sign");
    return h;
}

Integer hp_minus(std::uint64_t p) {
    auto a = hp_minus_character(p);
    auto b = hp_minus_maillet(p);
    if (a != b)
        throw consistency_error("class number methods disagree at p = " + std::to_string(p) + ": character product " +
                                a.get_str() + ", Maillet determinant " + b.get_str());
    return a;
}

HplusTable parse_hplus_table(const std::string& text) {
    HplusTable table;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty()) continue;
        auto where = "line " + std::to_string(lineno) + ": ";
        auto fields = split(line, ',');
        if (!header) {
            if (line != "p,hplus_factors,source,heuristic")
                throw precondition_error(where + "expected header 'p,hplus_factors,source,heuristic'");
            header = true;
            continue;
        }
        if (fields.size() != 4)
            throw precondition_error(where + "expected 4 fields, got " + std::to_string(fields.size()));
        HplusRecord rec;
        try {
            Integer p = parse_integer(trim(fields[0]));
            if (p < 3 || !p.fits_ulong_p() || !is_probable_prime(p)) throw precondition_error("p is not an odd prime");
            rec.p = p.get_ui();
            for (const auto& f : split(trim(fields[1]), ';')) {
                if (trim(f).empty()) throw precondition_error("empty factor");
                Integer q = parse_integer(trim(f));
                if (!is_probable_prime(q)) throw precondition_error("factor " + q.get_str() + " is not prime");
                rec.factors.push_back(q);
            }
        } catch (const precondition_error& e) {
            throw precondition_error(where + e.what());
        }
        rec.source = trim(fields[2]);
        auto h = trim(fields[3]);
        if (h == "true" || h == "1")
            rec.heuristic = true;
        else if (h == "false" || h == "0")
            rec.heuristic = false;
        else
            throw precondition_error(where + "heuristic must be true or false, got '" + h + "'");
        if (table.count(rec.p)) throw precondition_error(where + "duplicate entry for p = " + std::to_string(rec.p));
        table[rec.p] = std::move(rec);
    }
    return table;
}

HplusTable load_hplus_table(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw precondition_error("cannot open h+ table " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    try {
        return parse_hplus_table(buf.str());
    } catch (const precondition_error& e) {
        throw precondition_error(path + ": " + e.what());
    }
}

std::string to_string(GateVerdict g) {
    switch (g) {
        case GateVerdict::True:
            return "true";
        case GateVerdict::False:
            return "false";
        case GateVerdict::Unknown:
            return "unknown";
    }
    return "unknown";
}

ClassGateReport class_number_gate(std::uint64_t p, const HplusTable& table) {
    ClassGateReport r;
    r.p = p;
    r.h_minus = hp_minus(p);
    r.h_minus_odd_factor = odd_prime_factor(r.h_minus);
    if (auto it = table.find(p); it != table.end()) {
        r.h_plus_entry = it->second;
        for (const auto& q : it->second.factors)
            if (q != 2 && (!r.h_plus_odd_factor || q < *r.h_plus_odd_factor)) r.h_plus_odd_factor = q;
    }
    if (!r.h_minus_odd_factor)
        r.gate = GateVerdict::False;
    else if (!r.h_plus_entry)
        r.gate = GateVerdict::Unknown;
    else
        r.gate = r.h_plus_odd_factor ? GateVerdict::True : GateVerdict::False;
    return r;
}

}  // namespace cck
