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

#include "cliffsyn/graph_form.hpp"

#include <cmath>

#include "cliffsyn/error.hpp"

namespace cliffsyn {

bool GraphForm::is_identity_layout() const {
    for (size_t i = 0; i < k + n; i++) {
        for (size_t j = 0; j < k + n; j++) {
            bool expect = (i < k && j == k + i) || (j < k && i == k + j);
            if (G.get(i, j) != expect) return false;
        }
    }
    return true;
}

BitMatrix extract_graph(const IsometryTableau &t) {
    size_t n = t.n(), k = t.k();
    const BitMatrix &T = t.T();
    BitMatrix a = T.block(0, 0, n, n);
    BitMatrix b = T.block(n, 0, n, n);
    BitMatrix d = T.block(n, n, n, k);
    BitMatrix binv = invert(b);
    BitMatrix s = binv * d;
    BitMatrix g(n + k, n + k);
    g.set_block(0, 0, s.block(0, 0, k, k));
    BitMatrix bk = binv.block(0, 0, k, n);
    g.set_block(0, k, bk);
    g.set_block(k, 0, bk.transpose());
    g.set_block(k, k, a * binv);
    return g;
}

GraphForm to_graph_form(const IsometryTableau &t) {
    GraphForm gf;
    gf.n = t.n();
    gf.k = t.k();
    gf.tab = t;
    gf.pre_h = gf.tab.make_B_invertible();
    size_t n = gf.n, k = gf.k;
    // X-image j has X part B·(G_k; F)_j; ancilla column i ≥ k toggles row i of it.
    BitMatrix binv = invert(gf.tab.T().block(n, 0, n, n));
    BitMatrix s = binv * gf.tab.T().block(n, n, n, k);
    for (size_t i = k; i < n; i++) {
        for (size_t j = 0; j < k; j++) {
            if (s.get(i, j)) gf.tab.free_column_add(i, n + j);
        }
    }
    gf.G = extract_graph(gf.tab);
    return gf;
}

namespace {

void rank_one(BitMatrix &G, const BitVector &g) {
    for (size_t i = 0; i < G.rows(); i++) {
        if (g.get(i)) G.row(i) ^= g;
    }
}

}  // namespace

void graph_op_on_matrix(BitMatrix &G, size_t k, size_t n, const Gate &g) {
    size_t limit = g.side == Side::Input ? k : n;
    if (g.q0 >= limit || (g.two_qubit() && (g.q1 >= limit || g.q1 == g.q0))) {
        throw CliffError(ErrorCode::RangeViolation, "gate " + g.to_string() + " outside its block");
    }
    size_t off = g.side == Side::Input ? 0 : k;
    size_t a = off + g.q0, b = off + g.q1;
    switch (g.kind) {
        case GateKind::S:
        case GateKind::Sdg: G.flip(a, a); break;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z: break;
        case GateKind::CZ:
            G.flip(a, b);
            G.flip(b, a);
            break;
        case GateKind::CNOT:
            // The control's neighbourhood absorbs the target's.
            G.xor_row(a, b);
            G.xor_col(a, b);
            break;
        case GateKind::SWAP:
            G.swap_rows(a, b);
            G.swap_cols(a, b);
            break;
        case GateKind::H: {
            if (!G.get(a, a)) throw CliffError(ErrorCode::DiagonalMismatch, "H needs a loop on its node");
            BitVector v = G.col(a);
            v.flip(a);
            rank_one(G, v);
            break;
        }
        case GateKind::RxHalfPi: {
            if (G.get(a, a)) throw CliffError(ErrorCode::DiagonalMismatch, "Rx needs a loop-free node");
            rank_one(G, G.col(a));
            break;
        }
    }
}

void apply_graph_op(GraphForm &gf, const Gate &g) {
    graph_op_on_matrix(gf.G, gf.k, gf.n, g);
    for (const Gate &inv : inverse_gates(g)) {
        if (g.side == Side::Input) {
            gf.tab.apply_gate_left(inv);
        } else {
            gf.tab.apply_gate_right(inv);
        }
    }
}

std::complex<double> amplitude(const GraphForm &gf, const BitVector &x, const BitVector &y) {
    if (x.size() != gf.k || y.size() != gf.n) throw CliffError(ErrorCode::BadLength, "amplitude arguments");
    auto quad = [](const BitMatrix &m, const BitVector &v) {
        long s = 0;
        for (size_t i = 0; i < v.size(); i++) {
            if (!v.get(i)) continue;
            if (m.get(i, i)) s += 1;
            for (size_t j = i + 1; j < v.size(); j++) {
                if (v.get(j) && m.get(i, j)) s += 2;
            }
        }
        return s;
    };
    long e = quad(gf.Gk(), x) + quad(gf.Gn(), y);
    bool sign = gf.Bk().mul(y).dot(x);
    static const std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::complex<double> v = powers[e & 3] * std::pow(2.0, -0.5 * static_cast<double>(gf.n));
    return sign ? -v : v;
}

}  // namespace cliffsyn
