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

#include <algorithm>
#include <map>

#include "cliffsyn/error.hpp"
#include "cliffsyn/synth.hpp"

namespace cliffsyn {

namespace {

void require_state(const GraphForm &gf) {
    if (gf.k != 0) throw CliffError(ErrorCode::BadDims, "graph-state synthesis needs k = 0");
}

BitMatrix replay_graph(const BitMatrix &g0, const std::vector<Gate> &ops) {
    BitMatrix g = g0;
    for (const auto &op : ops) graph_op_on_matrix(g, 0, g.rows(), op);
    return g;
}

BitVector head(const BitVector &v, size_t len) {
    BitVector out(len);
    for (size_t i = 0; i < len; i++) out.set(i, v.get(i));
    return out;
}

/// A way to add a vector to the row being zeroed, at one point of the
/// emission sequence, for one two-qubit gate.
struct Insertion {
    size_t pos;
    size_t wire;
    enum Kind { Flip, Row, LoopRow } kind;
};

std::vector<Gate> insertion_gates(const Insertion &ins, size_t row) {
    switch (ins.kind) {
        case Insertion::Flip: return {make_gate(GateKind::CZ, row, ins.wire)};
        case Insertion::Row: return {make_gate(GateKind::CNOT, row, ins.wire)};
        case Insertion::LoopRow:
            return {make_gate(GateKind::S, ins.wire), make_gate(GateKind::CNOT, row, ins.wire),
                    make_gate(GateKind::Sdg, ins.wire)};
    }
    return {};
}

}  // namespace

std::vector<Gate> graph_zeroing_syndrome(const BitMatrix &g0, size_t isd_iters, uint64_t seed) {
    size_t n = g0.rows();
    std::vector<Gate> ops;
    for (size_t j = 0; j < n; j++) {
        BitMatrix g = replay_graph(g0, ops);
        BitVector s = head(g.row(j), j);
        if (!s.is_zero()) {
            // Walk back from the end. T maps a vector added at the current
            // position to its value once the later column operations ran.
            BitMatrix t = BitMatrix::identity(j);
            std::map<std::vector<uint64_t>, Insertion> found;
            std::vector<BitVector> rows;
            std::vector<Insertion> where;
            auto offer = [&](const BitVector &v, const Insertion &ins) {
                BitVector w = t.left_mul(v);
                if (w.is_zero()) return;
                if (found.emplace(w.words(), ins).second) {
                    rows.push_back(w);
                    where.push_back(ins);
                }
            };
            for (size_t pos = ops.size() + 1; pos-- > 0;) {
                for (size_t i = 0; i < j; i++) {
                    BitVector r = head(g.row(i), j);
                    offer(BitVector::unit(j, i), {pos, i, Insertion::Flip});
                    offer(r, {pos, i, Insertion::Row});
                    r.flip(i);
                    offer(r, {pos, i, Insertion::LoopRow});
                }
                if (pos == 0) break;
                const Gate &op = ops[pos - 1];
                graph_op_on_matrix(g, 0, n, op);
                if (op.kind == GateKind::CNOT) t.xor_row(op.q1, op.q0);
            }
            BitMatrix h = BitMatrix::from_rows(rows, j);
            SyndromeSolution sol = syndrome_decode(h, s, isd_iters, seed + j);
            std::vector<Insertion> chosen;
            for (size_t r = 0; r < rows.size(); r++) {
                if (sol.x.get(r)) chosen.push_back(where[r]);
            }
            std::stable_sort(chosen.begin(), chosen.end(),
                             [](const Insertion &a, const Insertion &b) { return a.pos > b.pos; });
            for (const auto &ins : chosen) {
                auto gs = insertion_gates(ins, j);
                ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(ins.pos), gs.begin(), gs.end());
            }
            g = replay_graph(g0, ops);
            if (!head(g.row(j), j).is_zero()) throw CliffError(ErrorCode::Unsolvable, "syndrome row not cleared");
        }
        if (g.get(j, j)) ops.push_back(make_gate(GateKind::S, j));
    }
    return ops;
}

std::vector<Gate> graph_zeroing_greedy_depth(const BitMatrix &g0) {
    size_t n = g0.rows();
    BitMatrix g = g0;
    std::vector<Gate> ops;
    auto off_weight = [](const BitVector &v, size_t self) {
        size_t w = v.popcount();
        return v.get(self) ? w - 1 : w;
    };
    auto has_edges = [&]() {
        for (size_t i = 0; i < n; i++) {
            if (off_weight(g.row(i), i) > 0) return true;
        }
        return false;
    };
    while (has_edges()) {
        std::vector<char> used(n, 0);
        while (true) {
            // Row j absorbing row i changes only the edges at j.
            size_t best_gain = 0, bi = 0, bj = 0;
            for (size_t j = 0; j < n; j++) {
                if (used[j]) continue;
                size_t before = off_weight(g.row(j), j);
                for (size_t i = 0; i < n; i++) {
                    if (i == j || used[i]) continue;
                    BitVector v = g.row(j) ^ g.row(i);
                    size_t after = off_weight(v, j);
                    if (before > after && before - after > best_gain) {
                        best_gain = before - after;
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (best_gain <= 1) break;
            Gate op = make_gate(GateKind::CNOT, bj, bi);
            graph_op_on_matrix(g, 0, n, op);
            ops.push_back(op);
            used[bi] = used[bj] = 1;
        }
        std::vector<size_t> free;
        for (size_t q = 0; q < n; q++) {
            if (!used[q]) free.push_back(q);
        }
        for (const auto &[a, b] : maximal_matching(g, free)) {
            Gate op = make_gate(GateKind::CZ, a, b);
            graph_op_on_matrix(g, 0, n, op);
            ops.push_back(op);
        }
    }
    for (size_t q = 0; q < n; q++) {
        if (g.get(q, q)) ops.push_back(make_gate(GateKind::S, q));
    }
    return ops;
}

Circuit synth_graphstate_syndrome(const GraphForm &gf, size_t isd_iters, uint64_t seed) {
    require_state(gf);
    Reducer r(gf);
    r.emit(graph_zeroing_syndrome(gf.G, isd_iters, seed));
    return r.finish();
}

Circuit synth_graphstate_greedy_depth(const GraphForm &gf) {
    require_state(gf);
    Reducer r(gf);
    r.emit(graph_zeroing_greedy_depth(gf.G));
    return r.finish();
}

}  // namespace cliffsyn
