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
#include <vector>

#include "json_io.hpp"

namespace cck::jobs {

using io::json;

extern const std::vector<std::string> kSubcommands;

/// Result of one computation plus any warnings it raised.
struct JobOutput {
    json result;
    std::vector<std::string> warnings;
};

/// Dispatch a subcommand on JSON arguments keyed by flag name (without dashes).
/// Relative fixture paths are resolved against base_dir when given.
JobOutput run_job(const std::string& subcommand, const json& args, const std::string& base_dir = "");

/// SHA-256 of the canonical form of {"subcommand", "args"}, hex encoded.
std::string input_digest(const std::string& subcommand, const json& args);

json make_report(const std::string& subcommand, const json& args, const JobOutput& out);

/// Error payload for exit codes 2 (precondition / parse) and 3 (consistency).
json make_error(const std::string& subcommand, const std::string& kind, const std::string& message);

struct CorpusSummary {
    json report;
    int exit_code = 0;
};

/// Runs every <name>.case.json in dir against <name>.expected.json, in sorted order.
/// Exit code 0 when all pass, 1 on any mismatch; a missing or unreadable
/// expectation file is a precondition_error naming it.
CorpusSummary run_corpus(const std::string& dir);

}  // namespace cck::jobs
