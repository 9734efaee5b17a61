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


#ifndef CLIFFSYN_IO_HPP
#define CLIFFSYN_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cliffsyn/circuit.hpp"
#include "cliffsyn/tableau.hpp"

namespace cliffsyn {

/// OpenQASM 2.0, one gate per line. Input-side gates are written in place;
/// a circuit is a flat time-ordered list once it leaves the synthesizer.
std::string emit_qasm(const Circuit &c);
/// Reads the subset emit_qasm writes. k is not recorded in QASM.
Circuit parse_qasm(const std::string &text, size_t k = 0);

/// Native format: "n k" then one Gate::to_string() per line.
std::string emit_native(const Circuit &c);
Circuit parse_native(const std::string &text);

/// Identity followed by 10n² + 10 seeded random output gates. Close to, but
/// not exactly, uniform over isometries.
IsometryTableau random_clifford(size_t n, size_t k, uint64_t seed);
/// The same churn, returned as the circuit that produced it.
Circuit random_clifford_circuit(size_t n, size_t k, uint64_t seed);
/// k independent commuting operators: stabilizers of a random state, each
/// multiplied by a random subset of the later ones.
std::vector<PauliOp> random_commuting_set(size_t n, size_t k, uint64_t seed);

}  // namespace cliffsyn

#endif
