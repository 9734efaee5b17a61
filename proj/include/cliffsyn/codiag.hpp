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


#ifndef CLIFFSYN_CODIAG_HPP
#define CLIFFSYN_CODIAG_HPP

#include <cstdint>
#include <vector>

#include "cliffsyn/circuit.hpp"
#include "cliffsyn/pauli.hpp"
#include "cliffsyn/synth.hpp"

namespace cliffsyn {

/// k Pauli operators on n qubits as columns; signs[j] set means −P_j.
struct PauliTableau {
    size_t n = 0;
    size_t k = 0;
    BitMatrix Z;
    BitMatrix X;
    BitVector signs;

    /// All operators need the same length and a real sign.
    static PauliTableau from_paulis(const std::vector<PauliOp> &ps);
    PauliOp column(size_t j) const;
    std::vector<PauliOp> columns() const;
};

enum class CodiagVariant { Syndrome, Matching };
const char *variant_name(CodiagVariant v);
/// "syndrome" or "matching"; throws BadConfig.
CodiagVariant parse_variant(const std::string &s);

/// circuit is a unitary on n wires (k = n in the Circuit sense) and
/// z_words[j] = C·P_j·C† is diagonal.
struct CodiagResult {
    Circuit circuit;
    std::vector<PauliOp> z_words;
    SynthReport report;
};

/// Throws NonCommuting, DependentColumns or TooManyPaulis on a bad set.
void validate_commuting_set(const PauliTableau &pt);

/// Pads the set to n independent commuting operators. The original columns
/// come first and keep their signs.
PauliTableau complete_to_full(const PauliTableau &pt);

/// Gates (in time order, acting on n wires) that leave X_{n−k} = 0. Binary
/// parts only: z and x are n×k with X_k (the first k rows of x) = I for the
/// syndrome version and invertible for the matching one.
std::vector<Gate> zero_lower_x_syndrome(const BitMatrix &z, const BitMatrix &x, size_t isd_iters = 100,
                                        uint64_t seed = 0);
/// Throws SingularXk.
std::vector<Gate> zero_lower_x_matching(const BitMatrix &x);

/// Runs the pipeline on the original set and, when k < n, on its completion,
/// each under `restarts` qubit orders (the first is the identity order).
/// Keeps the fewest two-qubit gates for Syndrome and the lowest two-qubit
/// depth for Matching.
CodiagResult codiagonalize(const PauliTableau &pt, CodiagVariant variant, size_t restarts = 10,
                           size_t isd_iters = 100, uint64_t seed = 0);

}  // namespace cliffsyn

#endif
