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


#ifndef CLIFFSYN_TESTS_TEST_UTIL_HPP
#define CLIFFSYN_TESTS_TEST_UTIL_HPP

#include <vector>

#include "cliffsyn/circuit.hpp"
#include "cliffsyn/pauli.hpp"

namespace cliffsyn::testing {

inline std::vector<GateKind> all_kinds() {
    return {GateKind::H,  GateKind::S, GateKind::Sdg, GateKind::CZ, GateKind::CNOT,
            GateKind::RxHalfPi, GateKind::X, GateKind::Y, GateKind::Z, GateKind::SWAP};
}

/// Every placement of every gate on n wires, ordered pairs for two-qubit kinds.
inline std::vector<Gate> all_gates(size_t n, Side side = Side::Output) {
    std::vector<Gate> out;
    for (GateKind kind : all_kinds()) {
        for (size_t a = 0; a < n; a++) {
            Gate probe = make_gate(kind, a, a, side);
            if (!probe.two_qubit()) {
                out.push_back(probe);
                continue;
            }
            for (size_t b = 0; b < n; b++) {
                if (b != a) out.push_back(make_gate(kind, a, b, side));
            }
        }
    }
    return out;
}

/// All 2·4^n Hermitian Pauli operators on n qubits.
inline std::vector<PauliOp> all_paulis(size_t n) {
    std::vector<PauliOp> out;
    for (size_t code = 0; code < (size_t{1} << (2 * n)); code++) {
        for (int sign = 0; sign < 2; sign++) {
            PauliOp p(n);
            for (size_t q = 0; q < n; q++) {
                p.z.set(q, (code >> (2 * q)) & 1);
                p.x.set(q, (code >> (2 * q + 1)) & 1);
            }
            p.phase_exp = 2 * sign;
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace cliffsyn::testing

#endif
