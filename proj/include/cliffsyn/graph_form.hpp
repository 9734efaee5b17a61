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

#ifndef CLIFFSYN_GRAPH_FORM_HPP
#define CLIFFSYN_GRAPH_FORM_HPP

#include <complex>
#include <vector>

#include "cliffsyn/bit_matrix.hpp"
#include "cliffsyn/circuit.hpp"
#include "cliffsyn/tableau.hpp"

namespace cliffsyn {

/// Graph-state form G = [G_k B_k; B_kᵀ G_n] of an isometry whose output H
/// layer `pre_h` has been split off. Nodes 0..k-1 are inputs, k..k+n-1 are
/// outputs. `tab` is the tableau G describes (pre_h already applied), kept
/// in step with G so that signs survive the reduction.
struct GraphForm {
    size_t n = 0;
    size_t k = 0;
    BitMatrix G;
    std::vector<Gate> pre_h;
    IsometryTableau tab;

    BitMatrix Gk() const { return G.block(0, 0, k, k); }
    BitMatrix Gn() const { return G.block(k, k, n, n); }
    BitMatrix Bk() const { return G.block(0, k, k, n); }
    size_t node(const Gate &g, size_t q) const { return g.side == Side::Input ? q : k + q; }
    /// G_k = 0, G_n = 0 and B_k = [I_k 0].
    bool is_identity_layout() const;
};

/// Splits off the H layer that makes B invertible, zeroes F with free
/// column operations and reads off G.
GraphForm to_graph_form(const IsometryTableau &t);
/// G read from a tableau whose B block is already invertible.
BitMatrix extract_graph(const IsometryTableau &t);

/// Records that gate g is emitted at its side of the circuit: the carried
/// tableau absorbs g⁻¹ and G is updated by the matching graph operation.
void apply_graph_op(GraphForm &gf, const Gate &g);
/// The graph operation alone, on a bare matrix with k input nodes.
void graph_op_on_matrix(BitMatrix &G, size_t k, size_t n, const Gate &g);

/// 2^{-n/2} i^{xᵀG_k x + yᵀG_n y} (-1)^{xᵀB_k y}, quadratic forms evaluated over
/// the integers (each off-diagonal pair contributes 2).
std::complex<double> amplitude(const GraphForm &gf, const BitVector &x, const BitVector &y);

}  // namespace cliffsyn

#endif
