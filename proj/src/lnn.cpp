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


#include <map>

#include "cliffsyn/error.hpp"
#include "cliffsyn/synth.hpp"

namespace cliffsyn {

namespace {

/// A wire value available between two emissions.
struct Slot {
    size_t pos;
    size_t wire;
    BitVector value;
};

size_t tri_index(size_t i, size_t j, size_t m) {
    if (i > j) std::swap(i, j);
    return i * m - i * (i - 1) / 2 + (j - i);
}

BitVector outer_code(const BitVector &u, size_t m) {
    BitVector code(m * (m + 1) / 2);
    for (size_t i = 0; i < m; i++) {
        if (!u.get(i)) continue;
        for (size_t j = i; j < m; j++) {
            if (u.get(j)) code.set(tri_index(i, j, m), true);
        }
    }
    return code;
}

BitVector sym_code(const BitMatrix &g) {
    size_t m = g.rows();
    BitVector code(m * (m + 1) / 2);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i; j < m; j++) {
            if (g.get(i, j)) code.set(tri_index(i, j, m), true);
        }
    }
    return code;
}

/// Indices of slots whose outer products sum to target, extra unit loops
/// e_i e_iᵀ allowed when `loops` is set; the second member lists those loops.
std::pair<std::vector<size_t>, std::vector<size_t>> solve_outer(const std::vector<Slot> &slots,
                                                                const BitMatrix &target, bool loops) {
    size_t m = target.rows();
    std::vector<size_t> keep;
    std::map<std::vector<uint64_t>, size_t> first;
    for (size_t s = 0; s < slots.size(); s++) {
        if (!slots[s].value.is_zero() && first.emplace(slots[s].value.words(), s).second) keep.push_back(s);
    }
    size_t vars = keep.size() + (loops ? m : 0);
    BitMatrix a(m * (m + 1) / 2, vars);
    for (size_t v = 0; v < keep.size(); v++) a.set_col(v, outer_code(slots[keep[v]].value, m));
    if (loops) {
        for (size_t i = 0; i < m; i++) a.set(tri_index(i, i, m), keep.size() + i, true);
    }
    auto x = solve(a, sym_code(target));
    if (!x) throw CliffError(ErrorCode::Unsolvable, "parities do not span the symmetric matrices");
    std::pair<std::vector<size_t>, std::vector<size_t>> out;
    for (size_t v = 0; v < keep.size(); v++) {
        if (x->get(v)) out.first.push_back(keep[v]);
    }
    for (size_t i = 0; loops && i < m; i++) {
        if (x->get(keep.size() + i)) out.second.push_back(i);
    }
    return out;
}

/// Inserts one single-qubit gate per chosen slot, latest position first.
void insert_at_slots(std::vector<Gate> &ops, const std::vector<Slot> &slots, std::vector<size_t> chosen,
                     GateKind kind) {
    std::sort(chosen.begin(), chosen.end(), [&](size_t a, size_t b) { return slots[a].pos > slots[b].pos; });
    for (size_t s : chosen) {
        ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(slots[s].pos), make_gate(kind, slots[s].wire));
    }
}

/// Rows of A under output CNOTs: row c absorbs row t.
struct RowLine {
    std::vector<BitVector> rows;
    std::vector<Gate> ops;

    void add(size_t c, size_t t) {
        rows[c] ^= rows[t];
        ops.push_back(make_gate(GateKind::CNOT, c, t));
    }
};

bool adjacent_only(const BitMatrix &g) {
    for (size_t i = 0; i < g.rows(); i++) {
        for (size_t j = i + 2; j < g.rows(); j++) {
            if (g.get(i, j)) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Gate> cz_lnn_depth2n(const BitMatrix &gn) {
    if (!gn.is_symmetric()) throw CliffError(ErrorCode::NotSymmetric, "CZ target must be symmetric");
    size_t n = gn.rows();
    std::vector<Gate> ops;
    if (adjacent_only(gn)) {
        for (size_t i = 0; i < n; i++) {
            if (gn.get(i, i)) ops.push_back(make_gate(GateKind::S, i));
        }
        for (size_t parity = 0; parity < 2; parity++) {
            for (size_t i = parity; i + 1 < n; i += 2) {
                if (gn.get(i, i + 1)) ops.push_back(make_gate(GateKind::CZ, i, i + 1));
            }
        }
        return ops;
    }
    // An S emitted while wire w carries ℓ removes ℓℓᵀ from the initial G_n;
    // a CNOT's target wire absorbs its control's value. Boxes (u, v) → (v, u⊕v)
    // on every pair of an odd-even network expose n(n+1)/2 independent ℓ.
    std::vector<BitVector> vals;
    std::vector<Slot> slots;
    for (size_t w = 0; w < n; w++) {
        vals.push_back(BitVector::unit(n, w));
        slots.push_back({0, w, vals[w]});
    }
    auto cnot = [&](size_t c, size_t t) {
        vals[t] ^= vals[c];
        ops.push_back(make_gate(GateKind::CNOT, c, t));
        slots.push_back({ops.size(), t, vals[t]});
    };
    for (size_t layer = 0; layer < n; layer++) {
        for (size_t a = layer % 2; a + 1 < n; a += 2) {
            cnot(a, a + 1);
            cnot(a + 1, a);
        }
    }
    insert_at_slots(ops, slots, solve_outer(slots, gn, false).first, GateKind::S);
    return ops;
}

KutinResult kutin_sort(const BitMatrix &a, const std::optional<BitMatrix> &payload) {
    size_t n = a.rows(), k = a.cols();
    if (rank(a) != k) throw CliffError(ErrorCode::SingularMatrix, "kutin_sort needs full column rank");
    if (payload && (payload->rows() != k || !payload->is_symmetric())) {
        throw CliffError(ErrorCode::DimMismatch, "payload must be a symmetric k × k matrix");
    }
    KutinResult res;

    // Stage one: extend A to an invertible n × n matrix (A as the last k
    // columns) and make it northwest triangular; A becomes [N; 0].
    std::vector<size_t> extra;
    {
        BitMatrix cur = a.transpose();
        size_t have = k;
        for (size_t i = 0; i < n && have < n; i++) {
            BitMatrix probe(have + 1, n);
            for (size_t r = 0; r < have; r++) probe.row(r) = cur.row(r);
            probe.row(have) = BitVector::unit(n, i);
            if (rank(probe) == have + 1) {
                cur = probe;
                extra.push_back(i);
                have++;
            }
        }
    }
    RowLine line;
    size_t off = n - k;
    for (size_t i = 0; i < n; i++) {
        BitVector r(n);
        for (size_t e = 0; e < extra.size(); e++) r.set(e, extra[e] == i);
        for (size_t j = 0; j < k; j++) r.set(off + j, a.get(i, j));
        line.rows.push_back(r);
    }
    // Key of row i: its lead once reduced by the rows below. coeff[i] writes
    // row i over those reduced rows, indexed by the row they came from.
    std::vector<size_t> key(n);
    std::vector<BitVector> coeff(n, BitVector(n));
    {
        std::map<size_t, std::pair<BitVector, size_t>> reduced;
        for (size_t i = n; i-- > 0;) {
            BitVector r = line.rows[i];
            while (reduced.count(r.last_one())) r ^= reduced.at(r.last_one()).first;
            key[i] = r.last_one();
            reduced.emplace(key[i], std::make_pair(r, i));
        }
        for (size_t i = 0; i < n; i++) {
            BitVector r = line.rows[i];
            while (!r.is_zero()) {
                const auto &[rr, j] = reduced.at(r.last_one());
                r ^= rr;
                coeff[i].flip(j);
            }
        }
    }
    std::vector<size_t> label(n);
    for (size_t i = 0; i < n; i++) label[i] = i;
    for (size_t layer = 0; layer < n; layer++) {
        for (size_t p = layer % 2; p + 1 < n; p += 2) {
            if (key[p] >= key[p + 1]) continue;
            size_t la = label[p], lb = label[p + 1];
            if (coeff[la].get(lb)) {
                coeff[la] ^= coeff[lb];
                line.add(p + 1, p);
                line.add(p, p + 1);
            } else {
                coeff[lb] ^= coeff[la];
                line.add(p, p + 1);
                line.add(p + 1, p);
            }
            std::swap(label[p], label[p + 1]);
            std::swap(key[p], key[p + 1]);
        }
    }
    for (size_t i = 0; i < n; i++) {
        if (line.rows[i].last_one() != n - 1 - i) throw CliffError(ErrorCode::BadStructure, "not northwest");
    }
    res.output = line.ops;

    // Stage two on the first k wires: NW to I with boxes (v, u⊕v) of two
    // CNOTs or plain swaps of three, every meeting exposing u⊕v.
    RowLine box;
    for (size_t i = 0; i < k; i++) {
        BitVector r(k);
        for (size_t j = 0; j < k; j++) r.set(j, line.rows[i].get(off + j));
        box.rows.push_back(r);
    }
    std::vector<Slot> slots;
    for (size_t w = 0; w < k; w++) slots.push_back({0, w, box.rows[w]});
    auto add = [&](size_t c, size_t t) {
        box.add(c, t);
        slots.push_back({box.ops.size(), c, box.rows[c]});
    };
    for (size_t layer = 0; layer < k; layer++) {
        for (size_t p = layer % 2; p + 1 < k; p += 2) {
            bool absorb = box.rows[p].get(box.rows[p + 1].last_one());
            add(p + 1, p);
            add(p, p + 1);
            if (!absorb) add(p + 1, p);
        }
    }
    for (size_t i = 0; i < k; i++) {
        if (!(box.rows[i] == BitVector::unit(k, i))) throw CliffError(ErrorCode::BadStructure, "box network missed I");
    }
    if (payload && !payload->is_zero()) {
        auto [rx, loops] = solve_outer(slots, *payload, true);
        insert_at_slots(box.ops, slots, rx, GateKind::RxHalfPi);
        for (size_t i : loops) res.input.push_back(make_gate(GateKind::S, i, Side::Input));
    }
    res.output.insert(res.output.end(), box.ops.begin(), box.ops.end());
    return res;
}

Circuit synth_lnn(const IsometryTableau &t) {
    Reducer r(t);
    size_t n = r.n(), k = r.k();
    r.emit(cz_lnn_depth2n(r.G().block(k, k, n, n)));
    if (k > 0 && !r.gf().is_identity_layout()) {
        KutinResult kr = kutin_sort(r.G().block(k, 0, n, k), r.G().block(0, 0, k, k));
        r.emit(kr.input);
        r.emit(kr.output);
    }
    return r.finish(Layout::LNN);
}

}  // namespace cliffsyn
