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

#include "deqaaa/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "deqaaa/error.hpp"

namespace deqaaa {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw SizeError("circuit needs at least one qubit");
}

Circuit& Circuit::append(GateOp op) {
    op.validate(n_qubits_);
    ops_.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.n_qubits_ != n_qubits_) {
        throw SizeError("cannot append a " + std::to_string(other.n_qubits_) +
                        "-qubit circuit to a " + std::to_string(n_qubits_) + "-qubit circuit");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
}

Circuit& Circuit::append_shifted(const Circuit& other, int offset) {
    if (offset < 0 || offset + other.n_qubits_ > n_qubits_) {
        throw IndexError("shifted circuit does not fit");
    }
    ops_.reserve(ops_.size() + other.ops_.size());
    for (GateOp op : other.ops_) {
        for (int& q : op.controls) q += offset;
        for (int& q : op.targets) q += offset;
        ops_.push_back(std::move(op));
    }
    return *this;
}

Circuit& Circuit::barrier() {
    std::vector<int> all(static_cast<std::size_t>(n_qubits_));
    std::iota(all.begin(), all.end(), 0);
    return append(gates::barrier(std::move(all)));
}

Circuit Circuit::inverse() const {
    Circuit out(n_qubits_);
    out.ops_.reserve(ops_.size());
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) out.ops_.push_back(it->inverse());
    return out;
}

namespace {

void write_list(std::ostream& out, const std::vector<int>& qs) {
    out << '[';
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (i) out << ',';
        out << qs[i];
    }
    out << ']';
}

std::vector<int> parse_list(std::string_view field, std::string_view key, int line_no) {
    auto fail = [&]() -> std::vector<int> {
        throw ParseError("line " + std::to_string(line_no) + ": expected " + std::string(key) +
                         "=[...], got '" + std::string(field) + "'");
    };
    if (field.substr(0, key.size()) != key || field.size() < key.size() + 3 ||
        field[key.size()] != '=' || field[key.size() + 1] != '[' || field.back() != ']') {
        return fail();
    }
    std::string_view body = field.substr(key.size() + 2, field.size() - key.size() - 3);
    std::vector<int> out;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size()) return fail();
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

void write_circuit(std::ostream& out, const Circuit& circuit) {
    out << "QUBITS " << circuit.n_qubits() << '\n';
    const auto old_precision = out.precision(17);
    for (const auto& op : circuit.ops()) {
        out << "GATE " << gate_name(op.kind);
        if (gate_has_angle(op.kind)) out << ' ' << op.angle;
        out << " controls=";
        write_list(out, op.controls);
        out << " targets=";
        write_list(out, op.targets);
        out << '\n';
    }
    out.precision(old_precision);
}

std::string to_text(const Circuit& circuit) {
    std::ostringstream os;
    write_circuit(os, circuit);
    return os.str();
}

Circuit read_circuit(std::istream& in) {
    std::string line;
    int line_no = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        if (head == "QUBITS") {
            int n = 0;
            if (circuit || !(ls >> n)) {
                throw ParseError("line " + std::to_string(line_no) + ": bad QUBITS header");
            }
            circuit.emplace(n);
            continue;
        }
        if (head != "GATE") {
            throw ParseError("line " + std::to_string(line_no) + ": unknown directive '" + head +
                             "'");
        }
        if (!circuit) throw ParseError("GATE before QUBITS header");
        std::string name;
        ls >> name;
        auto kind = parse_gate_kind(name);
        if (!kind) {
            throw ParseError("line " + std::to_string(line_no) + ": unknown gate '" + name + "'");
        }
        GateOp op;
        op.kind = *kind;
        if (gate_has_angle(*kind)) {
            std::string angle;
            ls >> angle;
            try {
                std::size_t used = 0;
                op.angle = std::stod(angle, &used);
                if (used != angle.size()) throw std::invalid_argument(angle);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad angle '" + angle +
                                 "'");
            }
        }
        std::string controls, targets, extra;
        ls >> controls >> targets;
        if (ls >> extra) {
            throw ParseError("line " + std::to_string(line_no) + ": trailing '" + extra + "'");
        }
        op.controls = parse_list(controls, "controls", line_no);
        op.targets = parse_list(targets, "targets", line_no);
        circuit->append(std::move(op));
    }
    if (!circuit) throw ParseError("missing QUBITS header");
    return *std::move(circuit);
}

Circuit circuit_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_circuit(is);
}

}  // namespace deqaaa
