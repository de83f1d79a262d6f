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

#include "jobs.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#ifndef CCK_VERSION
#define CCK_VERSION "0.0.0"
#endif

namespace cck::jobs {

namespace fs = std::filesystem;
using namespace cck::io;

const std::vector<std::string> kSubcommands{"fingen",         "order-ideal", "mapping-torus", "cover-homology",
                                            "wang",           "verify-selfcover", "dimension-bound", "prop-matrix",
                                            "periodicity",    "hp-minus",    "gate",          "corpus"};

namespace {

const json& require(const json& args, const std::string& key) {
    auto it = args.find(key);
    if (it == args.end()) throw precondition_error("missing --" + key);
    return *it;
}

std::uint64_t arg_u64(const json& args, const std::string& key) { return to_u64(require(args, key), "--" + key); }

int arg_sign(const json& args) {
    if (!args.contains("sign")) return 1;
    auto s = to_long(args["sign"], "--sign");
    if (s != 1 && s != -1) throw precondition_error("--sign must be 1 or -1");
    return static_cast<int>(s);
}

std::vector<std::uint64_t> arg_q_list(const json& args) {
    const auto& q = require(args, "q");
    std::vector<std::uint64_t> out;
    if (q.is_array()) {
        for (const auto& x : q) out.push_back(to_u64(x, "--q"));
    } else if (q.is_string()) {
        std::stringstream in(q.get<std::string>());
        std::string part;
        while (std::getline(in, part, ',')) out.push_back(to_u64(json(part), "--q"));
    } else {
        out.push_back(to_u64(q, "--q"));
    }
    if (out.empty()) throw precondition_error("--q lists no cover degrees");
    for (auto v : out)
        if (v < 1) throw precondition_error("cover degrees must be positive");
    return out;
}

// Calls fn(field) with Q or F_p according to --kappa.
template <class Fn>
json with_kappa(const json& args, Fn fn) {
    std::string kappa = args.contains("kappa") ? args["kappa"].get<std::string>() : "Q";
    if (kappa == "Q") return fn(RationalField{});
    if (kappa.rfind("Fp:", 0) == 0) return fn(PrimeField(parse_integer(kappa.substr(3))));
    throw precondition_error("--kappa must be Q or Fp:<p>, got '" + kappa + "'");
}

std::string kappa_name(const json& args) { return args.contains("kappa") ? args["kappa"].get<std::string>() : "Q"; }

json integers(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(from_integer(x));
    return out;
}

JobOutput fingen(const json& args) {
    auto M = to_module(require(args, "module"));
    auto v = finitely_generated_over_Z(M);
    json result{{"answer", v.finitely_generated ? "yes" : "no"},
                {"finitely_generated", v.finitely_generated},
                {"relevant_primes", integers(v.relevant_primes)},
                {"witness", nullptr},
                {"underlying_rank", nullptr}};
    if (v.witness)
        result["witness"] = {{"prime", from_integer(v.witness->prime)},
                             {"kind", to_string(v.witness->kind)},
                             {"polynomial", from_poly(v.witness->polynomial)}};
    if (v.underlying_rank) result["underlying_rank"] = *v.underlying_rank;
    return {result, {}};
}

JobOutput order_ideal_job(const json& args) {
    auto M = to_module(require(args, "module"));
    json result{{"order_ideal", from_laurent(order_ideal(M))}, {"relevant_primes", nullptr}};
    if (auto S = relevant_primes(M)) result["relevant_primes"] = integers(*S);
    return {result, {}};
}

JobOutput mapping_torus_job(const json& args) {
    auto X = to_complex(require(args, "complex"));
    json homology = with_kappa(args, [&](const auto& F) {
        json h = json::array();
        for (const auto& c : infinite_cover_homology(X, F)) h.push_back(from_cokernel(c));
        return h;
    });
    return {{{"complex", from_complex(X)}, {"kappa", kappa_name(args)}, {"homology", homology}}, {}};
}

JobOutput cover_homology_job(const json& args) {
    auto X = to_complex(require(args, "complex"));
    auto q = arg_u64(args, "q");
    json dims = with_kappa(args, [&](const auto& F) { return json(cover_homology(X, F, q).dims); });
    return {{{"kappa", kappa_name(args)}, {"q", q}, {"dims", dims}}, {}};
}

JobOutput wang_job(const json& args) {
    auto X = to_complex(require(args, "complex"));
    auto q = arg_u64(args, "q");
    json dims = with_kappa(args, [&](const auto& F) {
        auto wang = wang_dimensions(X, F, q);
        auto direct = cover_homology(X, F, q).dims;
        if (wang != direct) throw consistency_error("Wang sequence and direct cover homology disagree");
        return json(wang);
    });
    return {{{"kappa", kappa_name(args)}, {"q", q}, {"dims", dims}}, {}};
}

JobOutput verify_selfcover_job(const json& args) {
    auto X = to_complex(require(args, "complex"));
    SelfCoverWitness w;
    w.k = arg_u64(args, "k");
    w.sign = arg_sign(args);
    const auto& f = require(args, "f");
    const json& hbar = f.is_object() ? require(f, "hbar") : f;
    if (!hbar.is_array()) throw precondition_error("--f must list one matrix per degree under \"hbar\"");
    for (std::size_t i = 0; i < hbar.size(); ++i) w.hbar.push_back(to_rat_matrix(hbar[i], "hbar[" + std::to_string(i) + "]"));
    auto per_degree = verify_self_cover_relation(X, w);
    bool all = std::all_of(per_degree.begin(), per_degree.end(), [](bool b) { return b; });
    return {{{"k", w.k}, {"sign", w.sign}, {"degrees", per_degree}, {"holds", all}}, {}};
}

JobOutput dimension_bound_job(const json& args) {
    auto X = to_complex(require(args, "complex"));
    auto qs = arg_q_list(args);
    json result = with_kappa(args, [&](const auto& F) {
        auto rep = dimension_bound_check(X, F, qs);
        json rows = json::array();
        for (const auto& r : rep.rows) rows.push_back({{"q", r.q}, {"dims", r.dims}, {"within_bound", r.within_bound}});
        return json{{"holds", rep.holds}, {"rows", rows}, {"ranks", X.ranks()}};
    });
    result["kappa"] = kappa_name(args);
    return {result, {}};
}

JobOutput prop_matrix_job(const json& args) {
    const auto& f = require(args, "f");
    auto A = to_int_matrix(require(f, "A"), "A");
    auto B = to_int_matrix(require(f, "B"), "B");
    auto k = arg_u64(args, "k");
    auto sign = arg_sign(args);
    auto m = solve_prop_matrix(A, B, k, sign);
    return {{{"m", m}, {"k", k}, {"sign", sign}}, {}};
}

JobOutput periodicity_job(const json& args) {
    const auto& f = require(args, "f");
    const auto& mono = require(f, "monodromy");
    const auto& wit = require(f, "witnesses");
    if (!mono.is_array() || !wit.is_array()) throw precondition_error("monodromy and witnesses must be arrays");
    std::vector<FgAbelianAutomorphism> phis;
    std::vector<ConjugationWitness> ws;
    for (std::size_t j = 0; j < mono.size(); ++j)
        phis.push_back(to_automorphism(mono[j], "monodromy[" + std::to_string(j) + "]"));
    for (std::size_t j = 0; j < wit.size(); ++j) {
        ConjugationWitness w;
        w.B = to_int_matrix(require(wit[j], "B"), "witnesses[" + std::to_string(j) + "].B");
        w.sign = arg_sign(wit[j]);
        ws.push_back(std::move(w));
    }
    auto k = arg_u64(args, "k");
    auto r = cor_period_driver(phis, k, ws);
    return {{{"k", k}, {"m", r.m}, {"l", r.l}, {"m_per_degree", r.m_per_degree}, {"l_per_degree", r.l_per_degree}}, {}};
}

JobOutput hp_minus_job(const json& args) {
    auto p = arg_u64(args, "p");
    auto h = hp_minus(p);
    json odd = nullptr;
    if (auto q = odd_prime_factor(h)) odd = from_integer(*q);
    return {{{"p", p}, {"h_minus", from_integer(h)}, {"odd_prime_factor", odd}}, {}};
}

JobOutput gate_job(const json& args, const std::string& base_dir) {
    auto p = arg_u64(args, "p");
    fs::path path = require(args, "fixture").get<std::string>();
    if (path.is_relative() && !base_dir.empty()) path = fs::path(base_dir) / path;
    auto table = load_hplus_table(path.string());
    auto r = class_number_gate(p, table);
    JobOutput out;
    out.result = {{"p", p},
                  {"h_minus", from_integer(r.h_minus)},
                  {"h_minus_odd_factor", r.h_minus_odd_factor ? from_integer(*r.h_minus_odd_factor) : json(nullptr)},
                  {"h_plus_entry", r.h_plus_entry ? from_hplus_record(*r.h_plus_entry) : json(nullptr)},
                  {"h_plus_odd_factor", r.h_plus_odd_factor ? from_integer(*r.h_plus_odd_factor) : json(nullptr)},
                  {"verdict", to_string(r.gate)},
                  {"gate", r.gate == GateVerdict::Unknown ? json(nullptr) : json(r.gate == GateVerdict::True)}};
    if (r.h_plus_entry && r.h_plus_entry->heuristic)
        out.warnings.push_back("h_p^+ entry for p = " + std::to_string(p) + " is heuristic (" + r.h_plus_entry->source +
                               ")");
    if (r.gate == GateVerdict::Unknown)
        out.warnings.push_back("p = " + std::to_string(p) + " is absent from the h_p^+ table");
    return out;
}

json read_json_file(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw precondition_error("cannot read " + path.filename().string());
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw precondition_error("corrupted JSON in " + path.filename().string() + ": " + e.what());
    }
}

}  // namespace

JobOutput run_job(const std::string& subcommand, const json& args, const std::string& base_dir) {
    if (subcommand == "fingen") return fingen(args);
    if (subcommand == "order-ideal") return order_ideal_job(args);
    if (subcommand == "mapping-torus") return mapping_torus_job(args);
    if (subcommand == "cover-homology") return cover_homology_job(args);
    if (subcommand == "wang") return wang_job(args);
    if (subcommand == "verify-selfcover") return verify_selfcover_job(args);
    if (subcommand == "dimension-bound") return dimension_bound_job(args);
    if (subcommand == "prop-matrix") return prop_matrix_job(args);
    if (subcommand == "periodicity") return periodicity_job(args);
    if (subcommand == "hp-minus") return hp_minus_job(args);
    if (subcommand == "gate") return gate_job(args, base_dir);
    throw precondition_error("unknown subcommand '" + subcommand + "'");
}

std::string input_digest(const std::string& subcommand, const json& args) {
    auto text = canonical(json{{"subcommand", subcommand}, {"args", args}});
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr))
        throw consistency_error("SHA-256 digest failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

json make_report(const std::string& subcommand, const json& args, const JobOutput& out) {
    return {{"subcommand", subcommand},
            {"input_digest", input_digest(subcommand, args)},
            {"result", out.result},
            {"warnings", out.warnings},
            {"version", CCK_VERSION}};
}

json make_error(const std::string& subcommand, const std::string& kind, const std::string& message) {
    return {{"subcommand", subcommand}, {"error", {{"kind", kind}, {"message", message}}}, {"version", CCK_VERSION}};
}

CorpusSummary run_corpus(const std::string& dir) {
    if (!fs::is_directory(dir)) throw precondition_error("corpus directory " + dir + " does not exist");
    std::vector<fs::path> cases;
    for (const auto& entry : fs::directory_iterator(dir)) {
        auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.size() > 10 && name.substr(name.size() - 10) == ".case.json")
            cases.push_back(entry.path());
    }
    std::sort(cases.begin(), cases.end());
    CorpusSummary summary;
    json results = json::array();
    std::size_t passed = 0;
    for (const auto& path : cases) {
        auto name = path.filename().string();
        name = name.substr(0, name.size() - 10);
        auto expected_path = path.parent_path() / (name + ".expected.json");
        if (!fs::exists(expected_path))
            throw precondition_error("missing expectation file " + expected_path.filename().string());
        auto expected = read_json_file(expected_path);
        if (!expected.is_object() || !expected.contains("exit_code") || !expected.contains("result"))
            throw precondition_error("corrupted expectation file " + expected_path.filename().string() +
                                     ": needs \"exit_code\" and \"result\"");
        auto job = read_json_file(path);
        if (!job.is_object() || !job.contains("subcommand") || !job["subcommand"].is_string())
            throw precondition_error("corrupted case file " + path.filename().string());
        const std::string sub = job["subcommand"];
        const json args = job.value("args", json::object());
        json actual;
        int code = 0;
        try {
            if (sub == "corpus") throw precondition_error("corpus cases cannot nest");
            actual = run_job(sub, args, path.parent_path().string()).result;
        } catch (const precondition_error& e) {
            code = 2;
            actual = {{"kind", "precondition"}, {"message", e.what()}};
        } catch (const consistency_error& e) {
            code = 3;
            actual = {{"kind", "consistency"}, {"message", e.what()}};
        }
        bool ok = code == expected["exit_code"] && actual == expected["result"];
        json row{{"case", name}, {"status", ok ? "pass" : "fail"}};
        if (!ok) row["actual"] = {{"exit_code", code}, {"result", actual}};
        results.push_back(row);
        passed += ok;
    }
    summary.report = {{"cases", cases.size()},
                      {"passed", passed},
                      {"failed", cases.size() - passed},
                      {"results", results}};
    summary.exit_code = passed == cases.size() ? 0 : 1;
    return summary;
}

}  // namespace cck::jobs
