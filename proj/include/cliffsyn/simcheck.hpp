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

#ifndef CLIFFSYN_SIMCHECK_HPP
#define CLIFFSYN_SIMCHECK_HPP

#include <complex>
#include <vector>

#include "cliffsyn/circuit.hpp"
#include "cliffsyn/pauli.hpp"
#include "cliffsyn/tableau.hpp"

namespace cliffsyn {

using Complex = std::complex<double>;

/// Basis index b has qubit q in bit q.
using StateVector = std::vector<Complex>;

/// 2^n × 2^k matrix; column x is the image of |x⟩ on the first k wires with
/// the remaining wires in |0⟩.
struct DenseIsometry {
    size_t n = 0;
    size_t k = 0;
    std::vector<Complex> entries;

    Complex &at(size_t y, size_t x) { return entries[(y << k) | x]; }
    Complex at(size_t y, size_t x) const { return entries[(y << k) | x]; }
    StateVector column(size_t x) const;
};

constexpr size_t kDenseLimit = 12;

void apply_gate_dense(StateVector &psi, const Gate &g);
void apply_pauli_dense(StateVector &psi, const PauliOp &p);

/// Throws TooLarge above kDenseLimit qubits.
DenseIsometry dense_isometry(const Circuit &c);
/// The isometry a tableau describes, fixed up to one global phase.
DenseIsometry dense_from_tableau(const IsometryTableau &t);
bool equal_up_to_global_phase(const DenseIsometry &a, const DenseIsometry &b, double tol = 1e-9);
/// V†V = I within tol.
bool is_isometry(const DenseIsometry &v, double tol = 1e-9);
/// U P U† = Q where U is the single gate g on n qubits.
bool conjugation_matches(const Gate &g, size_t n, const PauliOp &p, const PauliOp &q, double tol = 1e-9);

}  // namespace cliffsyn

#endif
