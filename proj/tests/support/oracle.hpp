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

// Test-side reference machinery. Nothing here calls into the simulator's
// gate kernels: dense unitaries are assembled from Kronecker products of
// 2x2 matrices and depth is a longest path over the full dependency DAG.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "deqaaa/deqaaa.hpp"

namespace deqaaa::testing {

using C = std::complex<double>;

struct Mat {
    std::size_t dim = 0;
    std::vector<C> a;

    explicit Mat(std::size_t d = 0) : dim(d), a(d * d) {}
    C& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    C operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

    static Mat identity(std::size_t d) {
        Mat m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat two(C m00, C m01, C m10, C m11) {
        Mat m(2);
        m.a = {m00, m01, m10, m11};
        return m;
    }
};

inline Mat operator*(const Mat& x, const Mat& y) {
    Mat r(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t k = 0; k < x.dim; ++k) {
            const C v = x(i, k);
            if (v == C{}) continue;
            for (std::size_t j = 0; j < x.dim; ++j) r(i, j) += v * y(k, j);
        }
    return r;
}

inline Mat operator+(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
}

inline Mat operator-(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
}

inline Mat scaled(Mat x, C k) {
    for (auto& v : x.a) v *= k;
    return x;
}

inline Mat kron(const Mat& x, const Mat& y) {
    Mat r(x.dim * y.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j)
            for (std::size_t k = 0; k < y.dim; ++k)
                for (std::size_t l = 0; l < y.dim; ++l)
                    r(i * y.dim + k, j * y.dim + l) = x(i, j) * y(k, l);
    return r;
}

inline Mat pauli_i() { return Mat::identity(2); }
inline Mat pauli_x() { return Mat::two(0, 1, 1, 0); }
inline Mat pauli_y() { return Mat::two(0, C(0, -1), C(0, 1), 0); }
inline Mat pauli_z() { return Mat::two(1, 0, 0, -1); }
inline Mat proj_one() { return Mat::two(0, 0, 0, 1); }

inline Mat single(GateKind k, double t) {
    const double s2 = 1.0 / std::sqrt(2.0);
    switch (k) {
        case GateKind::kX:
        case GateKind::kCNOT:
            return pauli_x();
        case GateKind::kZ:
        case GateKind::kMCZ:
            return pauli_z();
        case GateKind::kH:
            return Mat::two(s2, s2, s2, -s2);
        case GateKind::kRY:
        case GateKind::kMCRY:
            return Mat::two(std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2));
        case GateKind::kRZ:
            return Mat::two(std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2));
        case GateKind::kPS:
        case GateKind::kMCPS:
            return Mat::two(1, 0, 0, std::polar(1.0, t));
        default:
            return pauli_i();
    }
}

// Kronecker chain with factor `f(q)` on qubit q (qubit 0 leftmost).
template <class F>
Mat chain(int n, F f) {
    Mat m = f(0);
    for (int q = 1; q < n; ++q) m = kron(m, f(q));
    return m;
}

inline Mat gate_matrix(const GateOp& op, int n) {
    const std::size_t dim = std::size_t{1} << n;
    if (op.kind == GateKind::kBarrier) return Mat::identity(dim);
    if (op.kind == GateKind::kSWAP) {
        // (II + XX + YY + ZZ) / 2 on the pair
        Mat acc(dim);
        const Mat paulis[] = {pauli_i(), pauli_x(), pauli_y(), pauli_z()};
        for (const auto& p : paulis) {
            acc = acc + chain(n, [&](int q) {
                      return (q == op.targets[0] || q == op.targets[1]) ? p : pauli_i();
                  });
        }
        return scaled(acc, 0.5);
    }
    const Mat u = single(op.kind, op.angle);
    const int t = op.targets[0];
    if (op.controls.empty()) {
        return chain(n, [&](int q) { return q == t ? u : pauli_i(); });
    }
    // I + P_controls (x) (U - I)
    const Mat du = u - pauli_i();
    const Mat term = chain(n, [&](int q) {
        if (q == t) return du;
        if (std::find(op.controls.begin(), op.controls.end(), q) != op.controls.end()) {
            return proj_one();
        }
        return pauli_i();
    });
    return Mat::identity(dim) + term;
}

inline Mat circuit_matrix(const Circuit& c) {
    Mat m = Mat::identity(std::size_t{1} << c.n_qubits());
    for (const auto& op : c.ops()) m = gate_matrix(op, c.n_qubits()) * m;
    return m;
}

inline std::vector<C> apply(const Mat& m, const std::vector<C>& v) {
    std::vector<C> r(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) r[i] += m(i, j) * v[j];
    return r;
}

inline std::vector<C> basis0(int n) {
    std::vector<C> v(std::size_t{1} << n);
    v[0] = 1.0;
    return v;
}

// max |x - c y| with c the phase of <y|x>.
inline double phase_dist(const std::vector<C>& x, const std::vector<C>& y) {
    C ip{};
    for (std::size_t i = 0; i < x.size(); ++i) ip += std::conj(y[i]) * x[i];
    const C c = std::abs(ip) > 0 ? ip / std::abs(ip) : C(1.0);
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - c * y[i]));
    return d;
}

inline double phase_dist(const Mat& x, const Mat& y) { return phase_dist(x.a, y.a); }

inline double plain_dist(const Mat& x, const DenseMatrix& y) {
    double d = 0;
    for (std::size_t r = 0; r < x.dim; ++r)
        for (std::size_t c = 0; c < x.dim; ++c) d = std::max(d, std::abs(x(r, c) - y(r, c)));
    return d;
}

// Longest chain in the dependency DAG: gate j precedes gate i when j < i and
// they share a qubit. Barriers weigh zero.
inline std::size_t dag_depth(const Circuit& c) {
    const auto& ops = c.ops();
    std::vector<std::size_t> best(ops.size(), 0);
    std::size_t out = 0;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto qi = ops[i].qubits();
        std::size_t longest = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const auto qj = ops[j].qubits();
            bool share = false;
            for (int a : qi)
                for (int b : qj) share = share || a == b;
            if (share) longest = std::max(longest, best[j]);
        }
        best[i] = longest + (ops[i].is_barrier() ? 0 : 1);
        out = std::max(out, best[i]);
    }
    return out;
}

inline std::vector<C> random_amplitudes(std::mt19937_64& g, int n, bool complex_valued) {
    std::normal_distribution<double> N(0.0, 1.0);
    std::vector<C> v(std::size_t{1} << n);
    double s = 0;
    for (auto& a : v) {
        a = complex_valued ? C(N(g), N(g)) : C(std::abs(N(g)), 0.0);
        s += std::norm(a);
    }
    for (auto& a : v) a /= std::sqrt(s);
    return v;
}

inline std::vector<BasisIndex> random_subset(std::mt19937_64& g, int n, std::size_t max_size) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<BasisIndex> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), g);
    std::uniform_int_distribution<std::size_t> k(1, std::min(max_size, dim - 1));
    all.resize(k(g));
    return all;
}

inline std::vector<int> random_partition(std::mt19937_64& g, int n) {
    std::uniform_int_distribution<int> t_dist(2, n);
    const int t = t_dist(g);
    std::vector<int> sizes(t, 1);
    std::uniform_int_distribution<int> pick(0, t - 1);
    for (int extra = n - t; extra > 0; --extra) ++sizes[pick(g)];
    return sizes;
}

inline Circuit random_circuit(std::mt19937_64& g, int n, int gates) {
    std::uniform_int_distribution<int> kind(0, 10);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    Circuit c(n);
    auto distinct = [&](int k) {
        std::vector<int> qs(n);
        for (int i = 0; i < n; ++i) qs[i] = i;
        std::shuffle(qs.begin(), qs.end(), g);
        qs.resize(k);
        return qs;
    };
    for (int i = 0; i < gates; ++i) {
        const int k = kind(g);
        if (n == 1 && k >= 6) {
            c.append(gates::h(qubit(g)));
            continue;
        }
        switch (k) {
            case 0: c.append(gates::x(qubit(g))); break;
            case 1: c.append(gates::z(qubit(g))); break;
            case 2: c.append(gates::h(qubit(g))); break;
            case 3: c.append(gates::ry(qubit(g), angle(g))); break;
            case 4: c.append(gates::rz(qubit(g), angle(g))); break;
            case 5: c.append(gates::ps(qubit(g), angle(g))); break;
            case 6: {
                auto q = distinct(2);
                c.append(gates::cnot(q[0], q[1]));
                break;
            }
            case 7: {
                auto q = distinct(2);
                c.append(gates::swap(q[0], q[1]));
                break;
            }
            default: {
                std::uniform_int_distribution<int> width(2, n);
                auto q = distinct(width(g));
                const int t = q.back();
                q.pop_back();
                if (k == 8) c.append(gates::mcps(q, t, angle(g)));
                if (k == 9) c.append(gates::mcz(q, t));
                if (k == 10) c.append(gates::mcry(q, t, angle(g)));
            }
        }
    }
    return c;
}

}  // namespace deqaaa::testing
