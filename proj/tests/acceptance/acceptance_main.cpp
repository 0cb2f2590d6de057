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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deqaaa/deqaaa.hpp"
#include "support/oracle.hpp"
#include "support/reference.hpp"

namespace {

using namespace deqaaa;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed checks for one criterion.
struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void near(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol)) {
            std::ostringstream s;
            s.precision(10);
            s << what << ": got " << got << ", want " << want << " +/- " << tol;
            failures.push_back(s.str());
        }
    }
    bool ok() const { return failures.empty(); }
};

struct Outcome {
    int id;
    bool pass;
    std::string summary;
};

std::vector<Outcome> g_outcomes;

void report(int id, const std::string& title, const Check& c, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << title << "  ("
              << detail << ")\n";
    const std::size_t shown = std::min<std::size_t>(c.failures.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << c.failures[i] << '\n';
    if (c.failures.size() > shown) {
        std::cout << "    ... " << c.failures.size() - shown << " more\n";
    }
    g_outcomes.push_back({id, c.ok(), title});
}

std::string fmt(double v, int prec = 4) {
    std::ostringstream s;
    s.precision(prec);
    s << v;
    return s.str();
}

AmplitudeSpec case_state() {
    return AmplitudeSpec::from_real(
        {testing::kCaseAmplitudes.begin(), testing::kCaseAmplitudes.end()}, true);
}

TargetSpec case_targets() { return TargetSpec(4, {8, 14}); }

struct ExactCase {
    std::string label;
    StateVector projector{1};
    StateVector circuit{1};
};

// Cases shared between the exactness and backend criteria.
std::vector<ExactCase> g_backend_cases;

void criterion1() {
    Check c;
    double worst = 0.0;
    const AmplitudeSpec spec = case_state();
    const TargetSpec t = case_targets();

    auto timed = [&](const std::string& name, const std::function<void()>& f) {
        const auto t0 = Clock::now();
        f();
        const double s = seconds_since(t0);
        worst = std::max(worst, s);
        c.expect(s < 1.0, name + " took " + fmt(s) + " s");
    };

    timed("p_g", [&] {
        const double p = success_probability(exact_distribution(prepare_direct(spec)), t);
        c.near(p, 0.1929, 5e-4, "p_g");
    });
    timed("qaaa", [&] {
        const RunReport q = qaaa_run(spec, t, {Backend::kCircuit});
        c.expect(q.iterations == 1, "qaaa r = " + std::to_string(q.iterations));
        c.near(q.p_final, 0.9595, 2e-3, "qaaa final success");
    });
    timed("eqaaa", [&] {
        for (Backend b : {Backend::kProjector, Backend::kCircuit}) {
            const RunReport e = eqaaa_run(spec, t, {b});
            c.expect(e.iterations == 2, "eqaaa J+1 = " + std::to_string(e.iterations));
            c.near(e.phase_angle.value_or(-1.0), 1.5609, 1e-3, "eqaaa phi");
            c.expect(e.p_final >= 1 - 1e-8, "eqaaa final success " + fmt(e.p_final, 17));
            if (b == Backend::kCircuit) g_backend_cases.back().circuit = e.final_state;
            else g_backend_cases.push_back({"4-qubit eqaaa", e.final_state, StateVector(1)});
        }
    });
    timed("deqaaa", [&] {
        const Partition part({2, 2});
        for (Backend b : {Backend::kProjector, Backend::kCircuit}) {
            const DeqaaaReport d = deqaaa_run(spec, t, part, {b});
            c.expect(d.nodes.size() == 2, "node count");
            if (d.nodes.size() != 2) return;
            c.expect(d.nodes[0].local_targets == TargetSpec(2, {0b10, 0b11}), "X_0 = {10,11}");
            c.expect(d.nodes[1].local_targets == TargetSpec(2, {0b00, 0b10}), "X_1 = {00,10}");
            c.near(d.nodes[0].plan.p, 0.5658, 1e-3, "p_0");
            c.near(d.nodes[1].plan.p, 0.5689, 1e-3, "p_1");
            c.near(d.nodes[0].plan.phi, 1.4542, 1e-3, "phi_0");
            c.near(d.nodes[1].plan.phi, 1.4494, 1e-3, "phi_1");
            c.expect(d.nodes[0].plan.repetitions() == 1, "J_0 + 1");
            c.expect(d.nodes[1].plan.repetitions() == 1, "J_1 + 1");
            c.near(d.p_g_prime, 0.4667, 1e-3, "p'_g");
            c.expect(d.phase2_executed && d.hat_J + 1 == 1, "hat J + 1");
            c.near(d.hat_phi, 1.6421, 1e-3, "hat phi");
            c.expect(d.p_final >= 1 - 1e-8, "deqaaa final success " + fmt(d.p_final, 17));
            if (b == Backend::kCircuit) g_backend_cases.back().circuit = d.final_state;
            else g_backend_cases.push_back({"4-qubit deqaaa", d.final_state, StateVector(1)});
        }
    });
    report(1, "4-qubit case study reproduction", c, "slowest step " + fmt(worst, 3) + " s");
}

void criterion2() {
    Check c;
    const auto t0 = Clock::now();
    std::mt19937_64 g(20260101);
    double min_e = 1.0, min_d = 1.0;
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(g() % 5);
        const AmplitudeSpec spec(testing::random_amplitudes(g, n, i % 2 == 1));
        const TargetSpec t(n, testing::random_subset(g, n, std::size_t{1} << (n - 1)));
        const RunReport a = eqaaa_run(spec, t, {Backend::kProjector});
        const RunReport b = eqaaa_run(spec, t, {Backend::kCircuit});
        min_e = std::min({min_e, a.p_final, b.p_final});
        c.expect(a.p_final >= 1 - 1e-8 && b.p_final >= 1 - 1e-8,
                 "eqaaa case " + std::to_string(i) + " success " + fmt(std::min(a.p_final, b.p_final), 17));
        g_backend_cases.push_back({"eqaaa " + std::to_string(i), a.final_state, b.final_state});
    }
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(g() % 5);
        const AmplitudeSpec spec(testing::random_amplitudes(g, n, i % 2 == 1));
        const TargetSpec t(n, testing::random_subset(g, n, std::size_t{1} << (n - 1)));
        const Partition part(testing::random_partition(g, n));
        const DeqaaaReport a = deqaaa_run(spec, t, part, {Backend::kProjector});
        const DeqaaaReport b = deqaaa_run(spec, t, part, {Backend::kCircuit});
        min_d = std::min({min_d, a.p_final, b.p_final});
        c.expect(a.p_final >= 1 - 1e-8 && b.p_final >= 1 - 1e-8,
                 "deqaaa case " + std::to_string(i) + " success " + fmt(std::min(a.p_final, b.p_final), 17));
        g_backend_cases.push_back({"deqaaa " + std::to_string(i), a.final_state, b.final_state});
    }
    const double s = seconds_since(t0);
    c.expect(s < 60.0, "runtime " + fmt(s) + " s");
    report(2, "exactness over 200 EQAAA + 200 DEQAAA random cases", c,
           "min success eqaaa " + fmt(min_e, 17) + ", deqaaa " + fmt(min_d, 17) + ", " + fmt(s, 3) + " s");
}

void criterion3() {
    Check c;
    std::mt19937_64 g(3003);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + static_cast<int>(g() % 5);
        const AmplitudeSpec spec(testing::random_amplitudes(g, n, i % 2 == 0));
        const TargetSpec t(n, testing::random_subset(g, n, std::size_t{1} << (n - 1)));
        const RunReport q = qaaa_run(spec, t, {Backend::kProjector});
        // independent prediction from the initial amplitudes
        double p = 0.0;
        for (auto x : t.indices()) p += std::norm(spec.amps()[x]);
        const double predicted = std::pow(std::sin((2 * q.iterations + 1) * std::asin(std::sqrt(p))), 2);
        const double err = std::abs(q.p_final - predicted);
        worst = std::max(worst, err);
        c.expect(err <= 1e-9, "case " + std::to_string(i) + " deviation " + fmt(err));
    }
    report(3, "QAAA success matches sin^2((2r+1) asin sqrt p_g)", c, "max deviation " + fmt(worst));
}

void criterion4() {
    Check c;
    double worst_norm = 0.0, worst_cond = 0.0;
    int points = 0;
    for (int i = 0; i < 25; ++i) {
        const double p = 0.02 + 0.96 * i / 24.0;
        const int j0 = iterations_eqaaa(p);
        for (int J : {j0, j0 + 1}) {
            const double phi = phase_angle(p, J);
            const RotationGeometry geo = rotation_geometry(p, phi);
            const double norm = std::sqrt(geo.n_x * geo.n_x + geo.n_y * geo.n_y + geo.n_z * geo.n_z);
            const double cond = std::abs((J + 1) * geo.alpha - geo.omega);
            worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
            worst_cond = std::max(worst_cond, cond);
            c.expect(std::abs(norm - 1.0) <= 1e-12, "axis norm at p=" + fmt(p) + " J=" + std::to_string(J));
            c.expect(cond <= 1e-6, "(J+1) alpha - omega at p=" + fmt(p) + " J=" + std::to_string(J) +
                                       " is " + fmt(cond));
            ++points;
        }
    }
    report(4, "rotation geometry over a (p, J) grid", c,
           std::to_string(points) + " points, max |norm-1| " + fmt(worst_norm) +
               ", max |(J+1)a-w| " + fmt(worst_cond));
}

void criterion5() {
    Check c;
    double worst = 0.0;
    for (const auto& k : g_backend_cases) {
        const double d = max_deviation_up_to_phase(k.projector.amplitudes(), k.circuit.amplitudes());
        worst = std::max(worst, d);
        c.expect(d <= 1e-10, k.label + " deviation " + fmt(d));
    }
    report(5, "circuit and projector backends agree up to global phase", c,
           std::to_string(g_backend_cases.size()) + " cases, max deviation " + fmt(worst));
}

void criterion6() {
    Check c;
    const auto t0 = Clock::now();
    std::mt19937_64 g(6006);
    std::uniform_real_distribution<double> angle(-pi, pi);
    double worst = 0.0;
    for (int m = 0; m <= 5; ++m) {
        for (int k = 0; k < 20; ++k) {
            const double phi = angle(g);
            const DecompositionResult r = decompose_mcps(m, phi, false);
            Circuit direct(m + 1);
            std::vector<int> cs(m);
            for (int i = 0; i < m; ++i) cs[i] = i;
            direct.append(gates::mcps(cs, m, phi));
            const double d = testing::phase_dist(testing::circuit_matrix(r.circuit),
                                                 testing::circuit_matrix(direct));
            worst = std::max(worst, d);
            c.expect(d <= 1e-10, "m=" + std::to_string(m) + " phi=" + fmt(phi) + " deviation " + fmt(d));
            for (const auto& op : r.circuit.ops()) {
                c.expect(op.kind == GateKind::kPS || op.kind == GateKind::kCNOT,
                         "m=" + std::to_string(m) + " emits a non-elementary gate");
            }
        }
    }
    const double s = seconds_since(t0);
    c.expect(s < 30.0, "runtime " + fmt(s) + " s");
    report(6, "MCPS decomposition soundness for m <= 5", c,
           "120 decompositions, max deviation " + fmt(worst) + ", " + fmt(s, 3) + " s");
}

bool has_zero_bit(const TargetSpec& t) {
    const BasisIndex ones = (BasisIndex{1} << t.n_bits()) - 1;
    return std::none_of(t.indices().begin(), t.indices().end(), [&](BasisIndex x) { return x == ones; });
}

long long depth_of(const Circuit& c) { return static_cast<long long>(circuit_depth(c)); }

void criterion7() {
    Check c;
    int single = 0, distributed = 0;

    // Anchor: a depth-10 preparation with p_g = 0.2 on {1000, 1110}.
    {
        Circuit prep(4);
        const double theta0 = 2 * std::asin(std::sqrt(0.8));
        for (int i = 0; i < 10; ++i) prep.append(gates::ry(0, theta0 / 10));
        for (int q = 1; q < 4; ++q) prep.append(gates::ry(q, pi / 2));
        const TargetSpec t = case_targets();
        const double p = success_probability(exact_distribution(apply_circuit(StateVector(4), prep)), t);
        c.near(p, 0.2, 1e-12, "anchor p_g");
        c.expect(depth_of(prep) == 10, "anchor dep(A) = " + std::to_string(depth_of(prep)));
        const Circuit q = build_amplification_circuit(prep, t, pi, iterations_qaaa(p));
        const EqaaaPlan e = plan_eqaaa(p);
        const Circuit ex = build_amplification_circuit(prep, t, e.phi, e.repetitions());
        c.expect(depth_of(q) == 39, "anchor QAAA depth " + std::to_string(depth_of(q)));
        c.expect(depth_of(ex) == 68, "anchor EQAAA depth " + std::to_string(depth_of(ex)));
        c.expect(analytic_depth_qaaa(10, p, 2) == 39, "analytic anchor QAAA");
        c.expect(analytic_depth_eqaaa(10, p, 2) == 68, "analytic anchor EQAAA");
        c.expect(success_probability(exact_distribution(apply_circuit(StateVector(4), ex)), t) >= 1 - 1e-8,
                 "anchor EQAAA circuit is exact");
        ++single;
    }

    std::mt19937_64 g(7007);
    while (single < 20) {
        const int n = 2 + static_cast<int>(g() % 5);
        const AmplitudeSpec spec(testing::random_amplitudes(g, n, single % 3 == 0));
        const TargetSpec t(n, testing::random_subset(g, n, 3));
        if (!has_zero_bit(t)) continue;
        const double p = success_probability(exact_distribution(prepare_direct(spec)), t);
        if (p >= kExactThreshold) continue;
        const Circuit prep = encode_amplitudes(spec);
        const long long depA = depth_of(prep);
        const auto m = static_cast<long long>(t.size());
        const Circuit q = build_amplification_circuit(prep, t, pi, iterations_qaaa(p));
        const EqaaaPlan e = plan_eqaaa(p);
        const Circuit ex = build_amplification_circuit(prep, t, e.phi, e.repetitions());
        const std::string tag = "config " + std::to_string(single);
        c.expect(depth_of(q) == analytic_depth_qaaa(depA, p, m), tag + " QAAA depth " +
                     std::to_string(depth_of(q)) + " vs " + std::to_string(analytic_depth_qaaa(depA, p, m)));
        c.expect(depth_of(ex) == analytic_depth_eqaaa(depA, p, m), tag + " EQAAA depth " +
                     std::to_string(depth_of(ex)) + " vs " + std::to_string(analytic_depth_eqaaa(depA, p, m)));
        ++single;
    }

    while (distributed < 10) {
        const int n = 3 + static_cast<int>(g() % 4);
        const AmplitudeSpec spec(testing::random_amplitudes(g, n, false));
        const TargetSpec t(n, testing::random_subset(g, n, 3));
        const Partition part(testing::random_partition(g, n));
        if (!has_zero_bit(t)) continue;
        const DeqaaaReport r = deqaaa_run(spec, t, part, {Backend::kCircuit});
        bool in_scope = true;
        std::vector<NodeDepthInput> nodes;
        for (const auto& nd : r.nodes) {
            in_scope = in_scope && !nd.skipped && has_zero_bit(nd.local_targets);
            nodes.push_back({depth_of(encode_amplitudes(nd.substate)), nd.plan.p,
                             static_cast<long long>(nd.local_targets.size())});
        }
        if (!in_scope) continue;
        const DeqaaaDepth d = analytic_depth_deqaaa(depth_of(encode_amplitudes(spec)), nodes,
                                                    r.p_g_prime, static_cast<long long>(t.size()));
        const std::string tag = "deqaaa config " + std::to_string(distributed);
        c.expect(depth_of(*r.phase1_circuit) == d.first_phase, tag + " first phase");
        c.expect(depth_of(*r.circuit) == d.total, tag + " total " + std::to_string(depth_of(*r.circuit)) +
                                                      " vs " + std::to_string(d.total));
        ++distributed;
    }
    report(7, "analytic depth equals measured depth", c,
           std::to_string(single) + " single-register configs incl. anchor 39/68, " +
               std::to_string(distributed) + " distributed configs");
}

void criterion8() {
    Check c;
    std::ostringstream detail;
    detail.precision(3);
    double prev_gate = 2.0, prev_depth = 2.0;
    for (int n : {6, 8, 10}) {
        const AmplitudeSpec spec(std::vector<Complex>(std::size_t{1} << n, 1.0), true);
        const TargetSpec t(n, {8, 14});
        const RunReport e = eqaaa_run(spec, t, {Backend::kCircuit});
        const DeqaaaReport d = deqaaa_run(spec, t, Partition(std::vector<int>(n / 2, 2)), {Backend::kCircuit});
        c.expect(e.p_final >= 1 - 1e-8 && d.p_final >= 1 - 1e-8, "n=" + std::to_string(n) + " not exact");
        const DepthReport de = analyze(decompose_circuit(*e.circuit));
        const DepthReport dd = analyze(decompose_circuit(*d.circuit));
        const double gate_ratio = static_cast<double>(dd.gate_count) / static_cast<double>(de.gate_count);
        const double depth_ratio = static_cast<double>(dd.depth) / static_cast<double>(de.depth);
        detail << "n=" << n << " gates " << dd.gate_count << "/" << de.gate_count << " depth " << dd.depth
               << "/" << de.depth << "; ";
        c.expect(gate_ratio < prev_gate, "gate ratio not improving at n=" + std::to_string(n));
        c.expect(depth_ratio < prev_depth, "depth ratio not improving at n=" + std::to_string(n));
        if (n == 10) {
            c.expect(gate_ratio <= 0.35, "n=10 gate ratio " + fmt(gate_ratio));
            c.expect(depth_ratio <= 0.35, "n=10 depth ratio " + fmt(depth_ratio));
        }
        prev_gate = gate_ratio;
        prev_depth = depth_ratio;
    }
    detail << "n=10 ratios " << fmt(prev_gate, 3) << " / " << fmt(prev_depth, 3);
    report(8, "decomposed DEQAAA vs EQAAA scaling on uniform inputs", c, detail.str());
}

void criterion9() {
    Check c;
    const Distribution exact = exact_distribution(prepare_direct(case_state()));
    auto median_kl = [&](std::uint64_t shots) {
        std::vector<double> v;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            v.push_back(kl_divergence(sample(exact, shots, seed).normalized(), exact));
        }
        std::sort(v.begin(), v.end());
        return (v[9] + v[10]) / 2;
    };
    const double m10k = median_kl(10000);
    const double m100k = median_kl(100000);
    c.expect(m100k < m10k, "median KL did not decrease");
    c.expect(kl_divergence(exact, exact) == 0.0, "KL of the exact distribution against itself");
    report(9, "KL divergence shrinks with shot count", c,
           "median 10k " + fmt(m10k) + ", 100k " + fmt(m100k));
}

}  // namespace

int main() {
    const std::vector<void (*)()> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                              criterion6, criterion7, criterion8, criterion9};
    for (auto f : criteria) {
        try {
            f();
        } catch (const std::exception& e) {
            Check c;
            c.failures.push_back(std::string("exception: ") + e.what());
            report(static_cast<int>(g_outcomes.size()) + 1, "aborted", c, "threw");
        }
    }
    const auto failed = std::count_if(g_outcomes.begin(), g_outcomes.end(), [](const Outcome& o) { return !o.pass; });
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
