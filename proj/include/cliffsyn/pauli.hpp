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

#ifndef CLIFFSYN_PAULI_HPP
#define CLIFFSYN_PAULI_HPP

#include <string>
#include <vector>

#include "cliffsyn/bit_matrix.hpp"

namespace cliffsyn {

/// The operator i^phase_exp · P_1 ⊗ ... ⊗ P_n where each P_q is one of the
/// Hermitian letters I, X, Y, Z selected by (z[q], x[q]): I=(0,0), X=(0,1),
/// Z=(1,0), Y=(1,1). Character q of a word is qubit q.
struct PauliOp {
    size_t n = 0;
    BitVector z;
    BitVector x;
    int phase_exp = 0;

    PauliOp() = default;
    explicit PauliOp(size_t n_) : n(n_), z(n_), x(n_) {}

    bool operator==(const PauliOp &o) const = default;
    char letter(size_t q) const;
    size_t weight() const { return (z | x).popcount(); }
    /// Sign prefix ("+", "-", "+i", "-i") followed by the letters.
    std::string to_string() const;
};

/// Accepts an optional "+", "-", "i", "+i" or "-i" prefix. With n = npos the
/// length is taken from the word.
PauliOp parse_pauli(const std::string &word, size_t n = BitVector::npos);
/// Exact operator product p1·p2.
PauliOp pauli_product(const PauliOp &p1, const PauliOp &p2);
/// 0 when the operators commute, 1 when they anticommute.
bool symplectic_product(const PauliOp &p1, const PauliOp &p2);
/// Reads one word per line; '#' starts a comment; blank lines are skipped.
std::vector<PauliOp> parse_pauli_list(const std::string &text);

}  // namespace cliffsyn

#endif
