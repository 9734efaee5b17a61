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

#ifndef CLIFFSYN_CIRCUIT_HPP
#define CLIFFSYN_CIRCUIT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace cliffsyn {

enum class GateKind { H, S, Sdg, CZ, CNOT, RxHalfPi, X, Y, Z, SWAP };
enum class Side { Input, Output };
enum class Layout { AllToAll, LNN };

/// For CNOT, q0 is the control and q1 the target. Input-side gates act on
/// the first k wires before the isometry, output-side gates after it.
struct Gate {
    GateKind kind = GateKind::H;
    size_t q0 = 0;
    size_t q1 = 0;
    Side side = Side::Output;

    bool operator==(const Gate &o) const = default;
    bool two_qubit() const { return kind == GateKind::CZ || kind == GateKind::CNOT || kind == GateKind::SWAP; }
    std::string to_string() const;
};

Gate make_gate(GateKind kind, size_t q, Side side = Side::Output);
Gate make_gate(GateKind kind, size_t a, size_t b, Side side = Side::Output);
const char *gate_name(GateKind kind);
/// Gate sequence whose conjugation action undoes g exactly (Rx(π/2)⁻¹ is X·Rx(π/2)).
std::vector<Gate> inverse_gates(const Gate &g);

struct CircuitMetrics {
    size_t two_qubit_count = 0;
    size_t two_qubit_depth = 0;
    size_t total_depth = 0;
    bool lnn_valid = true;
};

/// A circuit implementing a k-to-n isometry: the gate list runs in time order
/// on n wires, the first k of which carry the input and the rest start in |0⟩.
struct Circuit {
    size_t n = 0;
    size_t k = 0;
    std::vector<Gate> gates;
    Layout layout = Layout::AllToAll;

    void add(const Gate &g) { gates.push_back(g); }
    void append(const std::vector<Gate> &gs) { gates.insert(gates.end(), gs.begin(), gs.end()); }
    CircuitMetrics metrics() const;
};

/// Greedy ASAP layering; SWAP counts as three CNOTs.
CircuitMetrics compute_metrics(const std::vector<Gate> &gates, size_t n);

}  // namespace cliffsyn

#endif
