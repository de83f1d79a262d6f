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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cck/arith.hpp"

namespace cck {

/// Largest prime accepted by hp_minus: CCK_PRIME_BOUND if set, else 211.
std::uint64_t class_number_prime_bound();

/// h_p^- from the product of -B_{1,χ}/2 over the odd characters mod p, evaluated in Z[ζ_{p-1}].
Integer hp_minus_character(std::uint64_t p);
/// h_p^- from the Maillet determinant det[R(a·b^-1)]_{1<=a,b<=(p-1)/2}
///   = -(-1)^((p-1)/2) · p^((p-3)/2) · h_p^-.
Integer hp_minus_maillet(std::uint64_t p);
/// Both methods, cross-checked; disagreement is a consistency_error.
Integer hp_minus(std::uint64_t p);

struct HplusRecord {
    std::uint64_t p = 0;
    std::vector<Integer> factors;  ///< prime factors of h_p^+ with multiplicity; empty for h_p^+ = 1
    std::string source;
    bool heuristic = true;
};

using HplusTable = std::map<std::uint64_t, HplusRecord>;

/// CSV with header `p,hplus_factors,source,heuristic`; factors are ';'-separated.
HplusTable load_hplus_table(const std::string& path);
HplusTable parse_hplus_table(const std::string& text);

enum class GateVerdict { False, True, Unknown };
std::string to_string(GateVerdict g);

struct ClassGateReport {
    std::uint64_t p = 0;
    Integer h_minus;
    std::optional<Integer> h_minus_odd_factor;
    std::optional<HplusRecord> h_plus_entry;
    std::optional<Integer> h_plus_odd_factor;
    GateVerdict gate = GateVerdict::Unknown;
};

/// Both h_p^- and h_p^+ have odd prime factors. Unknown when the decision needs
/// an h_p^+ entry the table lacks.
ClassGateReport class_number_gate(std::uint64_t p, const HplusTable& table);

}  // namespace cck
