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

#include <optional>
#include <string>

#include <json.hpp>

#include "deqaaa_cli/config.hpp"

namespace deqaaa::cli {

inline constexpr int kSchemaVersion = 1;
/// Widest register whose decomposed circuit is built for the report.
inline constexpr int kMaxDecomposeQubits = 12;

struct RunOutcome {
    nlohmann::json report;
    std::optional<Histogram> histogram;
    Circuit circuit{1};
    std::optional<Circuit> decomposed;
    double p_final = 0.0;
    /// False when an exact algorithm missed success 1 - 1e-8.
    bool numeric_ok = true;
};

/// Runs one configuration in memory. Sampling is skipped when shots == 0.
RunOutcome execute(const RunConfig& cfg);

nlohmann::json depth_json(const DepthReport& r);

}  // namespace deqaaa::cli
