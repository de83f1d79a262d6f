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

// cck: batch front end. Every subcommand prints one JSON report on stdout.
//   exit 0  success
//   exit 1  corpus mismatch
//   exit 2  precondition or parse error
//   exit 3  internal cross-check failure

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "jobs.hpp"

using cck::jobs::json;

namespace {

struct Flag {
    const char* name;
    const char* help;
    bool is_json;
};

const std::map<std::string, std::vector<Flag>> kFlags{
    {"fingen", {{"module", "module presentation (JSON text or file)", true}}},
    {"order-ideal", {{"module", "module presentation (JSON text or file)", true}}},
    {"mapping-torus",
     {{"complex", "mapping torus {ranks, boundaries_F, f} (JSON text or file)", true},
      {"kappa", "coefficient field: Q or Fp:<p>", false}}},
    {"cover-homology",
     {{"complex", "twisted chain complex (JSON text or file)", true},
      {"kappa", "coefficient field: Q or Fp:<p>", false},
      {"q", "cover degree", false}}},
    {"wang",
     {{"complex", "twisted chain complex (JSON text or file)", true},
      {"kappa", "coefficient field: Q or Fp:<p>", false},
      {"q", "cover degree", false}}},
    {"verify-selfcover",
     {{"complex", "twisted chain complex (JSON text or file)", true},
      {"f", "witness {hbar: [rational matrix per degree]} (JSON text or file)", true},
      {"k", "covering degree", false},
      {"sign", "+1 or -1", false}}},
    {"dimension-bound",
     {{"complex", "twisted chain complex (JSON text or file)", true},
      {"kappa", "coefficient field: Q or Fp:<p>", false},
      {"q", "comma-separated cover degrees", false}}},
    {"prop-matrix",
     {{"f", "{A, B} integer matrices (JSON text or file)", true},
      {"k", "exponent k > 1", false},
      {"sign", "+1 or -1", false}}},
    {"periodicity",
     {{"f", "{monodromy: [automorphism], witnesses: [{B, sign}]} (JSON text or file)", true},
      {"k", "exponent k > 1", false}}},
    {"hp-minus", {{"p", "odd prime", false}}},
    {"gate", {{"p", "odd prime", false}, {"fixture", "h_p^+ table (CSV)", false}}},
};

const std::map<std::string, std::string> kHelp{
    {"fingen", "decide whether a module is finitely generated over Z"},
    {"order-ideal", "order ideal generator and relevant primes of a module"},
    {"mapping-torus", "infinite-cyclic-cover homology of an algebraic mapping torus"},
    {"cover-homology", "homology of the q-fold cyclic cover"},
    {"wang", "cover homology dimensions from the Wang sequence"},
    {"verify-selfcover", "check the self-covering relation on H_*(X_inf; Q)"},
    {"dimension-bound", "compare dim H_j(X_q) with the number of j-cells"},
    {"prop-matrix", "minimal m prime to k with A^m = I, given B A^k B^-1 = A^sign"},
    {"periodicity", "periods (m, l) of a monodromy on H_*/T and on H_*"},
    {"hp-minus", "first factor of the class number of Z[zeta_p]"},
    {"gate", "odd-prime-factor gate on h_p^- and the tabulated h_p^+"},
};

json load_json_arg(const std::string& flag, const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    std::string body = text;
    if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
        std::ifstream f(text);
        if (!f) throw cck::precondition_error("--" + flag + ": not JSON and not a readable file: " + text);
        body.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw cck::precondition_error("--" + flag + ": invalid JSON: " + e.what());
    }
}

int emit(const json& j, const std::string& out_path) {
    auto text = j.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cout << text;
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    f << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cck: finite generation, cyclic covers, periodicity and class-number gates"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string out_path;
    app.add_option("--out", out_path, "write the report to this file instead of stdout");

    std::map<std::string, std::map<std::string, std::string>> values;
    for (const auto& [name, flags] : kFlags) {
        auto* sub = app.add_subcommand(name, kHelp.at(name));
        for (const auto& f : flags) sub->add_option(std::string("--") + f.name, values[name][f.name], f.help);
    }
    std::string corpus_dir;
    auto* corpus = app.add_subcommand("corpus", "run a directory of cases against their expectations");
    corpus->add_option("dir", corpus_dir, "corpus directory")->required();

    std::string sub_name = "";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help();
        std::string attempted = argc > 1 ? argv[1] : "";
        std::string message = e.what();
        bool known = attempted == "corpus" || kFlags.count(attempted);
        if (!attempted.empty() && attempted[0] != '-' && !known) message = "unknown subcommand '" + attempted + "'";
        emit(cck::jobs::make_error(attempted, "usage", message), "");
        return 2;
    }
    sub_name = app.get_subcommands().front()->get_name();

    try {
        if (sub_name == "corpus") {
            auto summary = cck::jobs::run_corpus(corpus_dir);
            int rc = emit(summary.report, out_path);
            return rc ? rc : summary.exit_code;
        }
        json args = json::object();
        auto* sub = app.get_subcommand(sub_name);
        for (const auto& f : kFlags.at(sub_name)) {
            if (sub->count(std::string("--") + f.name) == 0) continue;
            const auto& v = values[sub_name][f.name];
            args[f.name] = f.is_json ? load_json_arg(f.name, v) : json(v);
        }
        auto out = cck::jobs::run_job(sub_name, args);
        return emit(cck::jobs::make_report(sub_name, args, out), out_path);
    } catch (const cck::precondition_error& e) {
        emit(cck::jobs::make_error(sub_name, "precondition", e.what()), out_path);
        return 2;
    } catch (const cck::consistency_error& e) {
        emit(cck::jobs::make_error(sub_name, "consistency", e.what()), out_path);
        return 3;
    } catch (const json::exception& e) {
        emit(cck::jobs::make_error(sub_name, "parse", e.what()), out_path);
        return 2;
    }
}
