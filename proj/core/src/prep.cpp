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

#include "deqaaa/prep.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "deqaaa/error.hpp"

namespace deqaaa {

namespace {

int width_of(std::size_t len) {
    if (len < 2 || (len & (len - 1)) != 0) {
        throw SizeError("amplitude vector length " + std::to_string(len) +
                        " is not a power of two >= 2");
    }
    int n = 0;
    while ((std::size_t{1} << n) < len) ++n;
    if (n > kMaxStateQubits) throw SizeError("too many qubits: " + std::to_string(n));
    return n;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_bitstring(const std::string& s) {
    return !s.empty() && s.find_first_not_of("01") == std::string::npos;
}

void x_layer(Circuit& c, BasisIndex pattern, int k) {
    for (int q = 0; q < k; ++q) {
        if ((pattern & qubit_mask(k, q)) == 0) c.append(gates::x(q));
    }
}

}  // namespace

AmplitudeSpec::AmplitudeSpec(std::vector<Complex> amps, bool normalize)
    : n_(width_of(amps.size())), amps_(std::move(amps)) {
    double s = 0.0;
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("non-finite amplitude");
        }
        s += std::norm(a);
    }
    if (!(s > 0.0)) throw DomainError("amplitude vector is zero");
    if (normalize) {
        const double k = 1.0 / std::sqrt(s);
        for (auto& a : amps_) a *= k;
    } else if (std::abs(s - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "amplitudes are not normalized (norm^2 = " << s << ")";
        throw DomainError(msg.str());
    }
}

AmplitudeSpec AmplitudeSpec::from_real(const std::vector<double>& amps, bool normalize) {
    return AmplitudeSpec(std::vector<Complex>(amps.begin(), amps.end()), normalize);
}

bool AmplitudeSpec::real_nonnegative() const noexcept {
    for (const auto& a : amps_) {
        if (a.imag() != 0.0 || a.real() < 0.0) return false;
    }
    return true;
}

AmplitudeSpec read_amplitudes_csv(std::istream& in, bool normalize) {
    std::map<BasisIndex, Complex> rows;
    int width = -1;
    std::string line;
    int lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(trim(f));
        const bool header = first && !fields.empty() && !is_bitstring(fields[0]);
        first = false;
        if (header) continue;
        auto bad = [&](const std::string& why) {
            return ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (fields.size() < 2 || fields.size() > 3) throw bad("expected bitstring,real[,imag]");
        if (!is_bitstring(fields[0])) throw bad("bad bitstring '" + fields[0] + "'");
        const int w = static_cast<int>(fields[0].size());
        if (width < 0) width = w;
        if (w != width) throw bad("bitstring width differs from earlier rows");
        if (width > kMaxStateQubits) throw bad("too many qubits");
        double re = 0.0;
        double im = 0.0;
        try {
            std::size_t pos = 0;
            re = std::stod(fields[1], &pos);
            if (pos != fields[1].size()) throw std::invalid_argument("trailing");
            if (fields.size() == 3) {
                im = std::stod(fields[2], &pos);
                if (pos != fields[2].size()) throw std::invalid_argument("trailing");
            }
        } catch (const std::logic_error&) {
            throw bad("bad number");
        }
        const BasisIndex x = from_bitstring(fields[0], width);
        if (!rows.emplace(x, Complex{re, im}).second) throw bad("duplicate basis state");
    }
    if (width < 0) throw ParseError("no amplitude rows");
    std::vector<Complex> amps(std::size_t{1} << width);
    for (const auto& [x, a] : rows) amps[x] = a;
    return AmplitudeSpec(std::move(amps), normalize);
}

Circuit encode_amplitudes(const AmplitudeSpec& spec) {
    const int n = spec.n_qubits();
    const auto& amps = spec.amps();

    // mass[k][b]: probability of the k-bit prefix b
    std::vector<std::vector<double>> mass(n + 1);
    mass[n].resize(amps.size());
    for (std::size_t x = 0; x < amps.size(); ++x) mass[n][x] = std::norm(amps[x]);
    for (int k = n - 1; k >= 0; --k) {
        mass[k].resize(std::size_t{1} << k);
        for (std::size_t b = 0; b < mass[k].size(); ++b) {
            mass[k][b] = mass[k + 1][2 * b] + mass[k + 1][2 * b + 1];
        }
    }

    Circuit c(n);
    for (int k = 0; k < n; ++k) {
        std::vector<std::pair<BasisIndex, double>> angles;
        for (BasisIndex b = 0; b < mass[k].size(); ++b) {
            if (!(mass[k][b] > 0.0)) continue;
            const double th =
                2.0 * std::atan2(std::sqrt(mass[k + 1][2 * b + 1]), std::sqrt(mass[k + 1][2 * b]));
            angles.emplace_back(b, th);
        }
        bool uniform = true;
        for (const auto& [b, th] : angles) {
            if (std::abs(th - angles.front().second) > 1e-14) uniform = false;
        }
        if (uniform) {
            if (angles.front().second != 0.0) c.append(gates::ry(k, angles.front().second));
            continue;
        }
        std::vector<int> controls(k);
        for (int q = 0; q < k; ++q) controls[q] = q;
        for (const auto& [b, th] : angles) {
            if (th == 0.0) continue;
            x_layer(c, b, k);
            c.append(gates::mcry(controls, k, th));
            x_layer(c, b, k);
        }
    }

    if (!spec.real_nonnegative()) {
        std::vector<int> controls(n - 1);
        for (int q = 0; q + 1 < n; ++q) controls[q] = q;
        for (BasisIndex x = 0; x < amps.size(); ++x) {
            if (amps[x] == Complex{}) continue;
            const double ph = std::arg(amps[x]);
            if (ph == 0.0) continue;
            x_layer(c, x, n);
            c.append(gates::mcps(controls, n - 1, ph));
            x_layer(c, x, n);
        }
    }
    return c;
}

StateVector prepare_direct(const AmplitudeSpec& spec) {
    return StateVector::from_amplitudes(spec.amps());
}

}  // namespace deqaaa
