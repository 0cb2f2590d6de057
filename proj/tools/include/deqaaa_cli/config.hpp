// Copyright 2026 The deqaaa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "deqaaa/deqaaa.hpp"

namespace deqaaa::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kInfeasible = 3, kNumericFailure = 4 };

/// Invalid or inconsistent configuration.
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// A target as written by the user. Bare tokens are bit strings when they
/// have exactly n characters of 0/1 and decimals otherwise; JSON numbers are
/// always decimals.
struct TargetToken {
    std::string text;
    bool decimal = false;
};

struct RunConfig {
    std::string algorithm = "eqaaa";
    /// "paper4q", "uniform:<n>", or a path to a bitstring,real,imag CSV.
    std::string state = "paper4q";
    bool normalize = false;
    std::vector<TargetToken> targets = {{"8", true}, {"14", true}};
    std::vector<int> partition;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 21;
    Backend backend = Backend::kProjector;
    bool decompose = false;
    BitOrder bit_order = BitOrder::kTheory;
    std::string output_dir;
    std::string name;
    /// Directory relative state paths are resolved against.
    std::filesystem::path base_dir;
};

/// Overlays the keys present in `j` on `base`. Throws ConfigError on
/// unknown keys or wrong types.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});

nlohmann::json read_json_file(const std::filesystem::path& path);

/// Throws ConfigError for an unknown algorithm or a partition given for a
/// non-distributed run (or missing for a distributed one).
void validate(const RunConfig& cfg);

/// Presets are normalized explicitly; files honour `normalize`.
AmplitudeSpec load_state(const RunConfig& cfg);

TargetSpec resolve_targets(const std::vector<TargetToken>& tokens, int n, BitOrder order);

/// Comma- or space-separated target tokens from the command line.
std::vector<TargetToken> parse_target_tokens(const std::vector<std::string>& args);

/// $DEQAAA_OUTPUT_DIR, else the working directory.
std::string default_output_dir();

std::string output_dir_of(const RunConfig& cfg);
std::string name_of(const RunConfig& cfg);

Backend parse_backend(const std::string& s);
std::string backend_name(Backend b);
BitOrder parse_bit_order(const std::string& s);

/// The sixteen published 4-qubit amplitudes (unnormalized as printed).
const std::vector<double>& preset4q_amplitudes();

}  // namespace deqaaa::cli
