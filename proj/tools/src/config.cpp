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

#include "deqaaa_cli/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace deqaaa::cli {

namespace {

const std::set<std::string> kAlgorithms = {"qaaa", "eqaaa", "deqaaa"};

const std::set<std::string> kRunKeys = {"algorithm", "state",    "normalize",  "targets",
                                        "partition", "shots",    "seed",       "backend",
                                        "decompose", "bit_order", "output_dir", "name"};

template <class T>
T get_as(const nlohmann::json& j, const std::string& key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config key '" + key + "': " + e.what());
    }
}

bool is_bits(const std::string& s) {
    return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

}  // namespace

const std::vector<double>& preset4q_amplitudes() {
    static const std::vector<double> a = {0.1506, 0.1908, 0.3120, 0.1788, 0.2055, 0.2719,
                                          0.2793, 0.2273, 0.3164, 0.2719, 0.3180, 0.2207,
                                          0.1860, 0.2572, 0.3046, 0.2200};
    return a;
}

Backend parse_backend(const std::string& s) {
    if (s == "projector") return Backend::kProjector;
    if (s == "circuit") return Backend::kCircuit;
    throw ConfigError("unknown backend '" + s + "' (expected circuit or projector)");
}

std::string backend_name(Backend b) { return b == Backend::kCircuit ? "circuit" : "projector"; }

BitOrder parse_bit_order(const std::string& s) {
    if (s == "theory") return BitOrder::kTheory;
    if (s == "reversed") return BitOrder::kReversed;
    throw ConfigError("unknown bit_order '" + s + "' (expected theory or reversed)");
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file " + path.string() + ": " + e.what());
    }
}

RunConfig config_from_json(const nlohmann::json& j, RunConfig cfg) {
    if (!j.is_object()) throw ConfigError("a run config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!kRunKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
    }
    if (j.contains("algorithm")) cfg.algorithm = get_as<std::string>(j, "algorithm");
    if (j.contains("state")) cfg.state = get_as<std::string>(j, "state");
    if (j.contains("normalize")) cfg.normalize = get_as<bool>(j, "normalize");
    if (j.contains("targets")) {
        const auto& t = j.at("targets");
        if (!t.is_array()) throw ConfigError("config key 'targets' must be an array");
        cfg.targets.clear();
        for (const auto& v : t) {
            if (v.is_number_unsigned()) {
                cfg.targets.push_back({std::to_string(v.get<std::uint64_t>()), true});
            } else if (v.is_string()) {
                const auto s = v.get<std::string>();
                if (!is_bits(s)) throw ConfigError("target '" + s + "' is not a bit string");
                cfg.targets.push_back({s, false});
            } else {
                throw ConfigError("targets must be nonnegative integers or bit strings");
            }
        }
    }
    if (j.contains("partition")) cfg.partition = get_as<std::vector<int>>(j, "partition");
    if (j.contains("shots")) cfg.shots = get_as<std::uint64_t>(j, "shots");
    if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j, "seed");
    if (j.contains("backend")) cfg.backend = parse_backend(get_as<std::string>(j, "backend"));
    if (j.contains("decompose")) cfg.decompose = get_as<bool>(j, "decompose");
    if (j.contains("bit_order")) cfg.bit_order = parse_bit_order(get_as<std::string>(j, "bit_order"));
    if (j.contains("output_dir")) cfg.output_dir = get_as<std::string>(j, "output_dir");
    if (j.contains("name")) cfg.name = get_as<std::string>(j, "name");
    return cfg;
}

void validate(const RunConfig& cfg) {
    if (!kAlgorithms.count(cfg.algorithm)) {
        throw ConfigError("unknown algorithm '" + cfg.algorithm + "' (expected qaaa, eqaaa or deqaaa)");
    }
    if (cfg.algorithm == "deqaaa" && cfg.partition.empty()) {
        throw ConfigError("deqaaa needs a partition");
    }
    if (cfg.algorithm != "deqaaa" && !cfg.partition.empty()) {
        throw ConfigError("a partition is only meaningful for deqaaa");
    }
    if (cfg.targets.empty()) throw ConfigError("no targets given");
}

namespace {

AmplitudeSpec load_state_unchecked(const RunConfig& cfg) {
    if (cfg.state == "paper4q") return AmplitudeSpec::from_real(preset4q_amplitudes(), true);
    if (cfg.state.rfind("uniform:", 0) == 0) {
        const std::string tail = cfg.state.substr(8);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(tail, &used);
            if (used != tail.size()) throw std::invalid_argument(tail);
        } catch (const std::logic_error&) {
            throw ConfigError("bad preset '" + cfg.state + "'");
        }
        if (n < 1 || n > kMaxStateQubits) throw ConfigError("preset width out of range: " + tail);
        return AmplitudeSpec::from_real(std::vector<double>(std::size_t{1} << n, 1.0), true);
    }
    std::filesystem::path p(cfg.state);
    if (p.is_relative() && !cfg.base_dir.empty()) p = cfg.base_dir / p;
    std::ifstream in(p);
    if (!in) throw ConfigError("state '" + cfg.state + "' is neither a preset nor a readable file");
    return read_amplitudes_csv(in, cfg.normalize);
}

}  // namespace

AmplitudeSpec load_state(const RunConfig& cfg) {
    try {
        return load_state_unchecked(cfg);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("state '" + cfg.state + "': " + e.what());
    }
}

TargetSpec resolve_targets(const std::vector<TargetToken>& tokens, int n, BitOrder order) {
    std::vector<BasisIndex> xs;
    for (const auto& t : tokens) {
        if (!t.decimal && t.text.size() == static_cast<std::size_t>(n) && is_bits(t.text)) {
            xs.push_back(from_bitstring(t.text, n));
            continue;
        }
        std::uint64_t d = 0;
        try {
            std::size_t used = 0;
            d = std::stoull(t.text, &used);
            if (used != t.text.size() || t.text[0] == '-') throw std::invalid_argument(t.text);
        } catch (const std::logic_error&) {
            throw ConfigError("target '" + t.text + "' is neither a " + std::to_string(n) +
                              "-bit string nor a decimal");
        }
        if (d >> n) {
            throw ConfigError("target " + t.text + " does not fit in " + std::to_string(n) +
                              " bits");
        }
        xs.push_back(decimal_to_index(d, n, order));
    }
    try {
        return TargetSpec(n, std::move(xs));
    } catch (const Error& e) {
        throw ConfigError(std::string("targets: ") + e.what());
    }
}

std::vector<TargetToken> parse_target_tokens(const std::vector<std::string>& args) {
    std::vector<TargetToken> out;
    for (const auto& a : args) {
        std::stringstream ss(a);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::stringstream ws(tok);
            std::string w;
            while (ws >> w) out.push_back({w, false});
        }
    }
    return out;
}

std::string default_output_dir() {
    if (const char* env = std::getenv("DEQAAA_OUTPUT_DIR"); env && *env) return env;
    return ".";
}

std::string output_dir_of(const RunConfig& cfg) {
    return cfg.output_dir.empty() ? default_output_dir() : cfg.output_dir;
}

std::string name_of(const RunConfig& cfg) { return cfg.name.empty() ? cfg.algorithm : cfg.name; }

}  // namespace deqaaa::cli
