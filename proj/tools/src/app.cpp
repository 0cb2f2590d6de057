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

#include "deqaaa_cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "deqaaa_cli/config.hpp"
#include "deqaaa_cli/report.hpp"

#ifndef DEQAAA_VERSION
#define DEQAAA_VERSION "unknown"
#endif

namespace deqaaa::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Flags shared by run and compare. Each value is applied only when given.
struct RunFlags {
    std::string config;
    std::string algorithm;
    std::string state;
    bool normalize = false;
    std::vector<std::string> targets;
    std::vector<int> partition;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string backend;
    bool decompose = false;
    bool reverse_bits = false;
    std::string output_dir;
    std::string name;
    bool timestamp = false;

    CLI::Option* o_algorithm = nullptr;
    CLI::Option* o_state = nullptr;
    CLI::Option* o_normalize = nullptr;
    CLI::Option* o_targets = nullptr;
    CLI::Option* o_partition = nullptr;
    CLI::Option* o_shots = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_backend = nullptr;
    CLI::Option* o_decompose = nullptr;
    CLI::Option* o_reverse = nullptr;
    CLI::Option* o_output_dir = nullptr;
    CLI::Option* o_name = nullptr;

    void add_state_options(CLI::App& app) {
        app.add_option("--config", config, "JSON config file; flags override its values");
        o_state = app.add_option("--state", state, "paper4q, uniform:<n>, or amplitude CSV path");
        o_normalize = app.add_flag("--normalize", normalize, "Rescale amplitudes from a file");
        o_targets = app.add_option("--targets", targets,
                                   "Targets: n-bit strings or decimals, comma separated");
        o_reverse = app.add_flag("--reverse-bits", reverse_bits,
                                 "Read decimal targets in reversed (readout) bit order");
        o_backend = app.add_option("--backend", backend, "circuit or projector");
        o_output_dir = app.add_option("--output-dir", output_dir,
                                      "Output directory (default $DEQAAA_OUTPUT_DIR or .)");
        o_name = app.add_option("--name", name, "Output file stem");
    }

    void add_run_options(CLI::App& app) {
        add_state_options(app);
        o_algorithm = app.add_option("--algorithm", algorithm, "qaaa, eqaaa or deqaaa");
        o_partition = app.add_option("--partition", partition, "Node sizes, e.g. 2,2")
                          ->delimiter(',');
        o_shots = app.add_option("--shots", shots, "Measurement shots (0 disables sampling)");
        o_seed = app.add_option("--seed", seed, "Sampling seed");
        o_decompose = app.add_flag("--decompose", decompose, "Also write the decomposed circuit");
        app.add_flag("--timestamp", timestamp, "Add a run_info timestamp to the report");
    }

    void overlay(RunConfig& cfg, bool with_algorithm) const {
        if (with_algorithm && o_algorithm && o_algorithm->count()) cfg.algorithm = algorithm;
        if (o_state->count()) {
            cfg.state = state;
            cfg.base_dir.clear();
        }
        if (o_normalize->count()) cfg.normalize = normalize;
        if (o_targets->count()) cfg.targets = parse_target_tokens(targets);
        if (o_partition && o_partition->count()) cfg.partition = partition;
        if (o_shots && o_shots->count()) cfg.shots = shots;
        if (o_seed && o_seed->count()) cfg.seed = seed;
        if (o_backend->count()) cfg.backend = parse_backend(backend);
        if (o_decompose && o_decompose->count()) cfg.decompose = decompose;
        if (o_reverse->count()) cfg.bit_order = reverse_bits ? BitOrder::kReversed : BitOrder::kTheory;
        if (o_output_dir->count()) cfg.output_dir = output_dir;
        if (o_name->count()) cfg.name = name;
    }
};

fs::path prepare_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
    return p;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os << std::setprecision(prec) << v;
    return os.str();
}

RunConfig base_config(const std::string& path) {
    RunConfig cfg;
    if (path.empty()) return cfg;
    cfg = config_from_json(read_json_file(path));
    cfg.base_dir = fs::path(path).parent_path();
    return cfg;
}

int cmd_run(const RunFlags& flags, std::ostream& out) {
    RunConfig cfg = base_config(flags.config);
    flags.overlay(cfg, true);
    RunOutcome o = execute(cfg);

    const fs::path dir = prepare_dir(output_dir_of(cfg));
    const std::string stem = name_of(cfg);
    if (o.histogram) {
        const std::string hist = stem + "_histogram.csv";
        std::ostringstream csv;
        write_histogram_csv(csv, *o.histogram);
        write_file(dir / hist, csv.str());
        o.report["histogram_path"] = hist;
    }
    if (cfg.decompose) {
        if (!o.decomposed) o.decomposed = decompose_circuit(o.circuit);
        const std::string file = stem + "_decomposed.circuit";
        write_file(dir / file, to_text(*o.decomposed));
        o.report["decomposed_circuit_path"] = file;
    }
    if (flags.timestamp) o.report["run_info"] = {{"timestamp", utc_now()}};
    write_file(dir / (stem + ".json"), dump(o.report));

    const json& r = o.report;
    out << r["algorithm"].get<std::string>() << ": n=" << r["n"] << " p_initial="
        << fmt(r["p_initial"].get<double>()) << " iterations=" << r["iterations"]
        << " p_final=" << fmt(r["p_final"].get<double>(), 10) << " gates=" << r["gate_count"]
        << " depth=" << r["depth"] << '\n';
    out << "wrote " << (dir / (stem + ".json")).string() << '\n';
    if (!o.numeric_ok) {
        throw NumericError("final success " + fmt(o.p_final, 17) + " is below 1 - 1e-8");
    }
    return kOk;
}

struct CompareRow {
    std::string label;
    std::string algorithm;
    int n = 0;
    double p_final = 0.0;
    DepthReport plain;
    std::optional<DepthReport> decomposed;
};

double reduction(double base, double v) { return base == 0.0 ? 0.0 : 100.0 * (1.0 - v / base); }

int cmd_compare(const RunFlags& flags, const std::vector<std::string>& algorithms,
                std::ostream& out) {
    std::vector<RunConfig> runs;
    std::string out_dir, stem = "compare";
    if (!flags.config.empty()) {
        const json j = read_json_file(flags.config);
        if (!j.is_object() || !j.contains("runs") || !j["runs"].is_array()) {
            throw ConfigError("compare config needs a 'runs' array");
        }
        for (const auto& [k, v] : j.items()) {
            if (k != "runs" && k != "defaults" && k != "output_dir" && k != "name") {
                throw ConfigError("unknown compare key '" + k + "'");
            }
        }
        RunConfig defaults;
        if (j.contains("defaults")) defaults = config_from_json(j["defaults"]);
        defaults.base_dir = fs::path(flags.config).parent_path();
        for (const auto& r : j["runs"]) runs.push_back(config_from_json(r, defaults));
        if (j.contains("output_dir")) out_dir = j["output_dir"].get<std::string>();
        if (j.contains("name")) stem = j["name"].get<std::string>();
    } else {
        if (algorithms.empty()) throw ConfigError("compare needs --config or --algorithms");
        for (const auto& a : algorithms) {
            RunConfig cfg;
            cfg.algorithm = a;
            runs.push_back(cfg);
        }
    }
    if (runs.size() < 2) throw ConfigError("compare needs at least two runs");
    for (auto& cfg : runs) {
        const std::string label = cfg.name;
        flags.overlay(cfg, false);
        if (cfg.algorithm != "deqaaa") cfg.partition.clear();
        cfg.shots = 0;
        cfg.name = label.empty() ? cfg.algorithm : label;
    }
    if (flags.o_output_dir->count()) out_dir = flags.output_dir;
    if (flags.o_name->count()) stem = flags.name;

    std::vector<CompareRow> rows;
    std::optional<TargetSpec> common;
    for (const auto& cfg : runs) {
        validate(cfg);
        const int n = load_state(cfg).n_qubits();
        const TargetSpec t = resolve_targets(cfg.targets, n, cfg.bit_order);
        if (common && !(*common == t)) {
            throw ConfigError("compared runs must share one target set");
        }
        common = t;
        const RunOutcome o = execute(cfg);
        CompareRow row{cfg.name, cfg.algorithm, n, o.p_final, analyze(o.circuit), std::nullopt};
        if (o.decomposed) row.decomposed = analyze(*o.decomposed);
        rows.push_back(std::move(row));
    }

    const CompareRow& base = rows.front();
    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "label,algorithm,n,p_final,gate_count,depth,decomposed_gate_count,decomposed_depth,"
           "gate_reduction_pct,depth_reduction_pct,decomposed_gate_reduction_pct,"
           "decomposed_depth_reduction_pct\n";
    json table = json::array();
    for (const auto& row : rows) {
        const double gr = reduction(base.plain.gate_count, row.plain.gate_count);
        const double dr = reduction(base.plain.depth, row.plain.depth);
        json jr = {{"label", row.label},
                   {"algorithm", row.algorithm},
                   {"n", row.n},
                   {"p_final", row.p_final},
                   {"gate_count", row.plain.gate_count},
                   {"depth", row.plain.depth},
                   {"gate_reduction_pct", gr},
                   {"depth_reduction_pct", dr},
                   {"decomposed_gate_count", nullptr},
                   {"decomposed_depth", nullptr},
                   {"decomposed_gate_reduction_pct", nullptr},
                   {"decomposed_depth_reduction_pct", nullptr}};
        csv << row.label << ',' << row.algorithm << ',' << row.n << ',' << row.p_final << ','
            << row.plain.gate_count << ',' << row.plain.depth << ',';
        if (row.decomposed && base.decomposed) {
            const double dgr = reduction(base.decomposed->gate_count, row.decomposed->gate_count);
            const double ddr = reduction(base.decomposed->depth, row.decomposed->depth);
            jr["decomposed_gate_count"] = row.decomposed->gate_count;
            jr["decomposed_depth"] = row.decomposed->depth;
            jr["decomposed_gate_reduction_pct"] = dgr;
            jr["decomposed_depth_reduction_pct"] = ddr;
            csv << row.decomposed->gate_count << ',' << row.decomposed->depth << ',' << gr << ','
                << dr << ',' << dgr << ',' << ddr << '\n';
        } else {
            csv << ",," << gr << ',' << dr << ",,\n";
        }
        table.push_back(jr);
    }
    const json doc = {{"schema_version", kSchemaVersion},
                      {"baseline", base.label},
                      {"targets", common->bitstrings()},
                      {"rows", table}};

    const fs::path dir = prepare_dir(out_dir.empty() ? default_output_dir() : out_dir);
    write_file(dir / (stem + ".csv"), csv.str());
    write_file(dir / (stem + ".json"), dump(doc));

    out << std::left << std::setw(12) << "label" << std::setw(10) << "gates" << std::setw(8)
        << "depth" << std::setw(12) << "dec_gates" << std::setw(10) << "dec_depth"
        << "dec_gate_red%\n";
    for (const auto& jr : table) {
        out << std::setw(12) << jr["label"].get<std::string>() << std::setw(10)
            << jr["gate_count"].dump() << std::setw(8) << jr["depth"].dump() << std::setw(12)
            << jr["decomposed_gate_count"].dump() << std::setw(10)
            << jr["decomposed_depth"].dump()
            << (jr["decomposed_gate_reduction_pct"].is_null()
                    ? std::string("-")
                    : fmt(jr["decomposed_gate_reduction_pct"].get<double>(), 4))
            << '\n';
    }
    out << std::right << "wrote " << (dir / (stem + ".csv")).string() << '\n';
    return kOk;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

struct KlFlags {
    std::string config;
    std::string state = "paper4q";
    bool normalize = false;
    std::vector<std::uint64_t> shots = {10000, 100000};
    std::uint64_t seed_count = 20;
    std::uint64_t seed_base = 1;
    std::string output_dir;
    std::string name = "kl_study";
    CLI::Option* o_state = nullptr;
    CLI::Option* o_normalize = nullptr;
    CLI::Option* o_shots = nullptr;
    CLI::Option* o_seed_count = nullptr;
    CLI::Option* o_seed_base = nullptr;
    CLI::Option* o_output_dir = nullptr;
    CLI::Option* o_name = nullptr;
};

int cmd_kl(const KlFlags& f, std::ostream& out) {
    KlFlags k = f;
    fs::path base_dir;
    if (!f.config.empty()) {
        const json j = read_json_file(f.config);
        base_dir = fs::path(f.config).parent_path();
        try {
            for (const auto& [key, v] : j.items()) {
                if (key == "state" && !f.o_state->count()) k.state = v.get<std::string>();
                else if (key == "normalize" && !f.o_normalize->count()) k.normalize = v.get<bool>();
                else if (key == "shots" && !f.o_shots->count()) k.shots = v.get<std::vector<std::uint64_t>>();
                else if (key == "seed_count" && !f.o_seed_count->count()) k.seed_count = v.get<std::uint64_t>();
                else if (key == "seed_base" && !f.o_seed_base->count()) k.seed_base = v.get<std::uint64_t>();
                else if (key == "output_dir" && !f.o_output_dir->count()) k.output_dir = v.get<std::string>();
                else if (key == "name" && !f.o_name->count()) k.name = v.get<std::string>();
                else if (key != "state" && key != "normalize" && key != "shots" &&
                         key != "seed_count" && key != "seed_base" && key != "output_dir" &&
                         key != "name") {
                    throw ConfigError("unknown kl-study key '" + key + "'");
                }
            }
        } catch (const json::exception& e) {
            throw ConfigError(std::string("kl-study config: ") + e.what());
        }
    }
    if (k.shots.empty()) throw ConfigError("kl-study needs at least one shot count");
    if (std::find(k.shots.begin(), k.shots.end(), 0u) != k.shots.end()) {
        throw ConfigError("shot counts must be at least 1");
    }
    if (k.seed_count == 0) throw ConfigError("seed count must be at least 1");

    RunConfig cfg;
    cfg.state = k.state;
    cfg.normalize = k.normalize;
    if (f.o_state->count() == 0) cfg.base_dir = base_dir;
    const Distribution exact = exact_distribution(prepare_direct(load_state(cfg)));

    std::ostringstream rows;
    rows << std::setprecision(17) << "shots,seed,kl_divergence\n";
    std::ostringstream summary;
    summary << std::setprecision(17) << "shots,median_kl_divergence\n";
    json medians = json::array();
    for (auto shots : k.shots) {
        std::vector<double> kls;
        for (std::uint64_t i = 0; i < k.seed_count; ++i) {
            const std::uint64_t seed = k.seed_base + i;
            const double d = kl_divergence(sample(exact, shots, seed).normalized(), exact);
            kls.push_back(d);
            rows << shots << ',' << seed << ',' << d << '\n';
        }
        const double m = median(kls);
        summary << shots << ',' << m << '\n';
        medians.push_back({{"shots", shots}, {"median_kl_divergence", std::isfinite(m) ? json(m) : json("inf")}});
        out << "shots=" << shots << " median_kl=" << fmt(m) << '\n';
    }
    const fs::path dir = prepare_dir(k.output_dir.empty() ? default_output_dir() : k.output_dir);
    write_file(dir / (k.name + ".csv"), rows.str());
    write_file(dir / (k.name + "_summary.csv"), summary.str());
    write_file(dir / (k.name + ".json"),
               dump({{"schema_version", kSchemaVersion},
                     {"state", k.state},
                     {"seed_base", k.seed_base},
                     {"seed_count", k.seed_count},
                     {"medians", medians}}));
    out << "wrote " << (dir / (k.name + ".csv")).string() << '\n';
    return kOk;
}

struct DecomposeFlags {
    std::string input;
    std::string output;
    int mcps = -1;
    double phi = 0.0;
};

int cmd_decompose(const DecomposeFlags& f, std::ostream& out) {
    Circuit source(1);
    if (!f.input.empty()) {
        std::ifstream in(f.input);
        if (!in) throw ConfigError("cannot open " + f.input);
        source = read_circuit(in);
    } else if (f.mcps >= 0) {
        std::vector<int> controls(static_cast<std::size_t>(f.mcps));
        for (int i = 0; i < f.mcps; ++i) controls[i] = i;
        source = Circuit(f.mcps + 1);
        source.append(gates::mcps(controls, f.mcps, f.phi));
    } else {
        throw ConfigError("decompose needs --input or --mcps");
    }
    const Circuit result = decompose_circuit(source);
    const DepthReport before = analyze(source);
    const DepthReport after = analyze(result);
    std::ostringstream text;
    text << "# source: gates=" << before.gate_count << " depth=" << before.depth << '\n'
         << "# decomposed: gates=" << after.gate_count << " depth=" << after.depth << '\n';
    if (source.n_qubits() <= kMaxUnitaryQubits) {
        text << "# max deviation: "
             << fmt(max_deviation_up_to_phase(unitary_of(source), unitary_of(result)), 3) << '\n';
    }
    write_circuit(text, result);
    if (f.output.empty()) {
        out << text.str();
    } else {
        write_file(f.output, text.str());
        out << "source: gates=" << before.gate_count << " depth=" << before.depth
            << "\ndecomposed: gates=" << after.gate_count << " depth=" << after.depth
            << "\nwrote " << f.output << '\n';
    }
    return kOk;
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and distributed amplitude amplification simulator", "deqaaa"};
    app.require_subcommand(1);

    RunFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "Run one amplification experiment");
    run_flags.add_run_options(*run);

    RunFlags cmp_flags;
    std::vector<std::string> algorithms;
    CLI::App* compare = app.add_subcommand("compare", "Compare gate counts and depths");
    cmp_flags.add_state_options(*compare);
    cmp_flags.o_partition =
        compare->add_option("--partition", cmp_flags.partition, "Node sizes for deqaaa rows")
            ->delimiter(',');
    compare->add_option("--algorithms", algorithms, "Algorithms to compare, first is baseline")
        ->delimiter(',');

    KlFlags kl;
    CLI::App* kls = app.add_subcommand("kl-study", "KL divergence of sampled vs exact distributions");
    kls->add_option("--config", kl.config, "JSON config file; flags override its values");
    kl.o_state = kls->add_option("--state", kl.state, "paper4q, uniform:<n>, or amplitude CSV");
    kl.o_normalize = kls->add_flag("--normalize", kl.normalize, "Rescale amplitudes from a file");
    kl.o_shots = kls->add_option("--shots", kl.shots, "Shot counts")->delimiter(',');
    kl.o_seed_count = kls->add_option("--seed-count", kl.seed_count, "Seeds per shot count");
    kl.o_seed_base = kls->add_option("--seed-base", kl.seed_base, "First seed");
    kl.o_output_dir = kls->add_option("--output-dir", kl.output_dir, "Output directory");
    kl.o_name = kls->add_option("--name", kl.name, "Output file stem");

    DecomposeFlags dec;
    CLI::App* decs = app.add_subcommand("decompose", "Expand multi-controlled gates");
    decs->add_option("--input", dec.input, "Circuit in the text format");
    decs->add_option("--mcps", dec.mcps, "Decompose a single MCPS with this many controls");
    decs->add_option("--phi", dec.phi, "Phase for --mcps");
    decs->add_option("--output", dec.output, "Output file (default stdout)");

    CLI::App* version = app.add_subcommand("version", "Print the version");

    std::vector<const char*> argv = {"deqaaa"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*run) return cmd_run(run_flags, out);
        if (*compare) return cmd_compare(cmp_flags, algorithms, out);
        if (*kls) return cmd_kl(kl, out);
        if (*decs) return cmd_decompose(dec, out);
        if (*version) {
            out << "deqaaa " << DEQAAA_VERSION << '\n';
            return kOk;
        }
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumericFailure;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const DomainError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const Error& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const json::exception& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    }
    return kConfigError;
}

}  // namespace deqaaa::cli
