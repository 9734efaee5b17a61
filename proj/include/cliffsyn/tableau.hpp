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

#ifndef CLIFFSYN_TABLEAU_HPP
#define CLIFFSYN_TABLEAU_HPP

#include <string>
#include <vector>

#include "cliffsyn/bit_matrix.hpp"
#include "cliffsyn/circuit.hpp"
#include "cliffsyn/pauli.hpp"

namespace cliffsyn {

/// Tableau of a Clifford isometry V from k to n qubits, V|x⟩ = U(|x⟩|0⟩).
/// Column j < n is the image V Z_j V† (for j ≥ k this is the image of the
/// Z on an ancilla wire), column n + j is the image of X_j, j < k. Rows
/// 0..n-1 hold Z components, rows n..2n-1 hold X components, and r holds the
/// sign of each column image.
class IsometryTableau {
   public:
    IsometryTableau() = default;
    IsometryTableau(size_t n, size_t k);

    static IsometryTableau identity(size_t n, size_t k);

    size_t n() const { return n_; }
    size_t k() const { return k_; }
    size_t num_cols() const { return n_ + k_; }
    BitMatrix &T() { return t_; }
    const BitMatrix &T() const { return t_; }
    BitVector &r() { return r_; }
    const BitVector &r() const { return r_; }

    PauliOp column(size_t j) const;
    /// Requires a Hermitian operator (even phase).
    void set_column(size_t j, const PauliOp &p);

    /// Conjugates every image by g: V ← g·V. Requires g.side = Output.
    void apply_gate_right(const Gate &g);
    /// Precomposes with g on the input wires: V ← V·g. Requires g.side = Input.
    void apply_gate_left(const Gate &g);

    /// Commutation pattern and independence of the columns agree with the identity.
    bool is_valid() const;
    /// Multiplies column dst by the ancilla image in column src (k ≤ src < n).
    void free_column_add(size_t src, size_t dst);
    /// Applies and returns an output-side H layer after which the X rows of
    /// the Z-image columns form an invertible matrix.
    std::vector<Gate> make_B_invertible();

    /// Representative of the free-column class: the ancilla columns in
    /// reduced echelon form and every other column reduced at their pivots.
    IsometryTableau canonical() const;
    bool operator==(const IsometryTableau &o) const = default;

    /// "n k", then 2n rows of T, then r; bits separated by spaces.
    std::string to_text() const;
    static IsometryTableau from_text(const std::string &text);

   private:
    size_t n_ = 0;
    size_t k_ = 0;
    BitMatrix t_;
    BitVector r_;
};

/// Conjugates every column of [Z; X] (2n rows) and its sign bit by g.
/// No range checks.
void conjugate_columns(BitMatrix &zx, BitVector &r, size_t n, const Gate &g);
/// g_m ⋯ g_1 P g_1† ⋯ g_m† for the gates in time order; P must be Hermitian.
PauliOp conjugate_pauli(const PauliOp &p, const std::vector<Gate> &gates);

/// a and b describe the same isometry (equal canonical forms).
bool equivalent(const IsometryTableau &a, const IsometryTableau &b);

/// Tableau obtained by running the circuit's gates from the identity.
IsometryTableau replay_tableau(const Circuit &c);

}  // namespace cliffsyn

#endif
