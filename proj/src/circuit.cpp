// Copyright 2021 Google LLC
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

#include "cliffsyn/circuit.hpp"

#include <algorithm>

namespace cliffsyn {

const char *gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::S: return "S";
        case GateKind::Sdg: return "Sdg";
        case GateKind::CZ: return "CZ";
        case GateKind::CNOT: return "CNOT";
        case GateKind::RxHalfPi: return "Rx";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::SWAP: return "SWAP";
    }
    return "?";
}

std::string Gate::to_string() const {
    std::string s = gate_name(kind);
    s += " " + std::to_string(q0);
    if (two_qubit()) s += " " + std::to_string(q1);
    if (side == Side::Input) s += " in";
    return s;
}

Gate make_gate(GateKind kind, size_t q, Side side) { return Gate{kind, q, q, side}; }

Gate make_gate(GateKind kind, size_t a, size_t b, Side side) { return Gate{kind, a, b, side}; }

std::vector<Gate> inverse_gates(const Gate &g) {
    switch (g.kind) {
        case GateKind::S: return {Gate{GateKind::Sdg, g.q0, g.q1, g.side}};
        case GateKind::Sdg: return {Gate{GateKind::S, g.q0, g.q1, g.side}};
        case GateKind::RxHalfPi: return {g, Gate{GateKind::X, g.q0, g.q1, g.side}};
        default: return {g};
    }
}

CircuitMetrics compute_metrics(const std::vector<Gate> &gates, size_t n) {
    CircuitMetrics m;
    std::vector<size_t> two(n, 0), total(n, 0);
    for (const auto &g : gates) {
        if (g.two_qubit()) {
            size_t cost = g.kind == GateKind::SWAP ? 3 : 1;
            m.two_qubit_count += cost;
            size_t a = g.q0, b = g.q1;
            size_t t = std::max(two[a], two[b]) + cost;
            two[a] = two[b] = t;
            size_t u = std::max(total[a], total[b]) + cost;
            total[a] = total[b] = u;
            if ((a > b ? a - b : b - a) != 1) m.lnn_valid = false;
        } else {
            total[g.q0] += 1;
        }
    }
    for (size_t q = 0; q < n; q++) {
        m.two_qubit_depth = std::max(m.two_qubit_depth, two[q]);
        m.total_depth = std::max(m.total_depth, total[q]);
    }
    return m;
}

CircuitMetrics Circuit::metrics() const { return compute_metrics(gates, n); }

}  // namespace cliffsyn
