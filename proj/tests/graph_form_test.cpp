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


#include <gtest/gtest.h>

#include <random>

#include "cliffsyn/error.hpp"
#include "cliffsyn/graph_form.hpp"
#include "cliffsyn/io.hpp"
#include "cliffsyn/simcheck.hpp"

using namespace cliffsyn;

namespace {

/// A gate whose graph operation is defined on the current G.
Gate random_legal_gate(const GraphForm &gf, std::mt19937_64 &rng) {
    static const GateKind kinds[] = {GateKind::S, GateKind::Sdg, GateKind::CZ, GateKind::CNOT, GateKind::SWAP,
                                     GateKind::H, GateKind::RxHalfPi, GateKind::X, GateKind::Z};
    while (true) {
        Side side = (gf.k > 0 && rng() % 3 == 0) ? Side::Input : Side::Output;
        size_t w = side == Side::Input ? gf.k : gf.n;
        GateKind kind = kinds[rng() % 9];
        size_t a = rng() % w, b = rng() % w;
        Gate g = make_gate(kind, a, b, side);
        if (g.two_qubit() && a == b) continue;
        if (!g.two_qubit()) g.q1 = a;
        bool loop = gf.G.get(gf.node(g, a), gf.node(g, a));
        if (kind == GateKind::H && !loop) continue;
        if (kind == GateKind::RxHalfPi && loop) continue;
        return g;
    }
}

}  // namespace

TEST(graph_form, extraction_rebuilds_tableau_blocks) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        size_t n = 2 + seed % 5, k = seed % (n + 1);
        GraphForm gf = to_graph_form(random_clifford(n, k, seed));
        EXPECT_TRUE(gf.G.is_symmetric());
        EXPECT_TRUE(gf.tab.is_valid());
        const BitMatrix &T = gf.tab.T();
        BitMatrix b = T.block(n, 0, n, n);
        // Z-columns are (G_n B; B), X-columns are (B_kᵀ... ) up to the block layout.
        EXPECT_EQ(gf.Gn() * b, T.block(0, 0, n, n));
        BitMatrix s = invert(b) * T.block(n, n, n, k);
        EXPECT_TRUE(s.block(k, 0, n - k, k).is_zero());
    }
}

TEST(graph_form, operations_track_the_carried_tableau) {
    std::mt19937_64 rng(5);
    for (uint64_t seed = 0; seed < 40; seed++) {
        size_t n = 2 + seed % 5, k = seed % (n + 1);
        GraphForm gf = to_graph_form(random_clifford(n, k, seed));
        for (int step = 0; step < 60; step++) {
            Gate g = random_legal_gate(gf, rng);
            apply_graph_op(gf, g);
            ASSERT_TRUE(gf.tab.is_valid());
            ASSERT_EQ(rank(gf.tab.T().block(n, 0, n, n)), n) << g.to_string();
            ASSERT_EQ(extract_graph(gf.tab), gf.G) << g.to_string() << " n=" << n << " k=" << k;
        }
    }
}

TEST(graph_form, preconditions_are_enforced) {
    GraphForm gf = to_graph_form(IsometryTableau::identity(3, 1));
    EXPECT_THROW(apply_graph_op(gf, make_gate(GateKind::CZ, 0, 1, Side::Input)), CliffError);
    BitMatrix G = gf.G;
    EXPECT_THROW(graph_op_on_matrix(G, 1, 3, make_gate(GateKind::H, 0)), CliffError);
    G.set(1, 1, true);
    EXPECT_THROW(graph_op_on_matrix(G, 1, 3, make_gate(GateKind::RxHalfPi, 0)), CliffError);
}

TEST(graph_form, amplitude_matches_dense_up_to_pauli_frame) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        size_t n = 1 + seed % 4, k = seed % (n + 1);
        GraphForm gf = to_graph_form(random_clifford(n, k, 100 + seed));
        DenseIsometry target = dense_from_tableau(gf.tab);
        DenseIsometry formula{n, k, std::vector<Complex>(size_t{1} << (n + k))};
        for (size_t y = 0; y < (size_t{1} << n); y++) {
            for (size_t x = 0; x < (size_t{1} << k); x++) {
                BitVector xv(k), yv(n);
                for (size_t i = 0; i < k; i++) xv.set(i, (x >> i) & 1);
                for (size_t i = 0; i < n; i++) yv.set(i, (y >> i) & 1);
                formula.at(y, x) = amplitude(gf, xv, yv);
            }
        }
        bool found = false;
        for (size_t code = 0; code < (size_t{1} << (2 * n)) && !found; code++) {
            PauliOp p(n);
            for (size_t q = 0; q < n; q++) {
                p.z.set(q, (code >> (2 * q)) & 1);
                p.x.set(q, (code >> (2 * q + 1)) & 1);
            }
            DenseIsometry framed = formula;
            for (size_t x = 0; x < (size_t{1} << k); x++) {
                StateVector col = formula.column(x);
                apply_pauli_dense(col, p);
                for (size_t y = 0; y < col.size(); y++) framed.at(y, x) = col[y];
            }
            found = equal_up_to_global_phase(framed, target);
        }
        EXPECT_TRUE(found) << "seed " << seed;
    }
}
