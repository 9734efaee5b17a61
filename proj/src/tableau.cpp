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

#include "cliffsyn/tableau.hpp"

#include <sstream>

#include "cliffsyn/error.hpp"

namespace cliffsyn {

IsometryTableau::IsometryTableau(size_t n, size_t k) : n_(n), k_(k), t_(2 * n, n + k), r_(n + k) {
    if (k > n) throw CliffError(ErrorCode::BadDims, "k must not exceed n");
}

IsometryTableau IsometryTableau::identity(size_t n, size_t k) {
    IsometryTableau t(n, k);
    for (size_t j = 0; j < n + k; j++) t.t_.set(j, j, true);
    return t;
}

PauliOp IsometryTableau::column(size_t j) const {
    PauliOp p(n_);
    for (size_t q = 0; q < n_; q++) {
        p.z.set(q, t_.get(q, j));
        p.x.set(q, t_.get(n_ + q, j));
    }
    p.phase_exp = r_.get(j) ? 2 : 0;
    return p;
}

void IsometryTableau::set_column(size_t j, const PauliOp &p) {
    if (p.phase_exp & 1) throw CliffError(ErrorCode::BadStructure, "column image must be Hermitian");
    for (size_t q = 0; q < n_; q++) {
        t_.set(q, j, p.z.get(q));
        t_.set(n_ + q, j, p.x.get(q));
    }
    r_.set(j, p.phase_exp == 2);
}

void conjugate_columns(BitMatrix &t, BitVector &r, size_t n, const Gate &g) {
    size_t a = g.q0, b = g.q1;
    BitVector &za = t.row(a), &xa = t.row(n + a);
    // Sign updates read the rows before they change.
    switch (g.kind) {
        case GateKind::H:
            r ^= za & xa;
            t.swap_rows(a, n + a);
            break;
        case GateKind::S:
            r ^= xa & za;
            za ^= xa;
            break;
        case GateKind::Sdg:
            r ^= xa & ~za;
            za ^= xa;
            break;
        case GateKind::RxHalfPi:
            r ^= za & ~xa;
            xa ^= za;
            break;
        case GateKind::X: r ^= za; break;
        case GateKind::Z: r ^= xa; break;
        case GateKind::Y: r ^= za ^ xa; break;
        case GateKind::CZ: {
            BitVector &zb = t.row(b), &xb = t.row(n + b);
            r ^= xa & xb & (za ^ zb);
            za ^= xb;
            zb ^= xa;
            break;
        }
        case GateKind::CNOT: {
            BitVector &zb = t.row(b), &xb = t.row(n + b);
            r ^= xa & zb & ~(xb ^ za);
            xb ^= xa;
            za ^= zb;
            break;
        }
        case GateKind::SWAP:
            t.swap_rows(a, b);
            t.swap_rows(n + a, n + b);
            break;
    }
}

PauliOp conjugate_pauli(const PauliOp &p, const std::vector<Gate> &gates) {
    if (p.phase_exp & 1) throw CliffError(ErrorCode::BadStructure, "conjugate_pauli needs a Hermitian operator");
    size_t n = p.n;
    BitMatrix t(2 * n, 1);
    BitVector r(1);
    for (size_t q = 0; q < n; q++) {
        t.set(q, 0, p.z.get(q));
        t.set(n + q, 0, p.x.get(q));
    }
    r.set(0, p.phase_exp == 2);
    for (const auto &g : gates) {
        if (g.q0 >= n || g.q1 >= n) throw CliffError(ErrorCode::BadQubit, "gate " + g.to_string());
        conjugate_columns(t, r, n, g);
    }
    PauliOp out(n);
    for (size_t q = 0; q < n; q++) {
        out.z.set(q, t.get(q, 0));
        out.x.set(q, t.get(n + q, 0));
    }
    out.phase_exp = r.get(0) ? 2 : 0;
    return out;
}

void IsometryTableau::apply_gate_right(const Gate &g) {
    if (g.q0 >= n_ || (g.two_qubit() && (g.q1 >= n_ || g.q1 == g.q0))) {
        throw CliffError(ErrorCode::BadQubit, "gate " + g.to_string() + " on " + std::to_string(n_) + " qubits");
    }
    conjugate_columns(t_, r_, n_, g);
}

void IsometryTableau::apply_gate_left(const Gate &g) {
    if (g.q0 >= k_ || (g.two_qubit() && (g.q1 >= k_ || g.q1 == g.q0))) {
        throw CliffError(ErrorCode::BadQubit, "input gate " + g.to_string() + " with k = " + std::to_string(k_));
    }
    std::vector<size_t> qs = {g.q0};
    if (g.two_qubit()) qs.push_back(g.q1);
    size_t m = qs.size();
    // Conjugation images of the local basis Paulis.
    IsometryTableau local = identity(m, m);
    Gate lg = g;
    lg.side = Side::Output;
    lg.q0 = 0;
    lg.q1 = m > 1 ? 1 : 0;
    local.apply_gate_right(lg);

    std::vector<PauliOp> zimg, ximg;
    for (size_t q : qs) {
        zimg.push_back(column(q));
        ximg.push_back(column(n_ + q));
    }
    auto image_of = [&](const PauliOp &loc) {
        // loc = ± Π_l i^{z_l x_l} X_l^{x_l} Z_l^{z_l}.
        PauliOp acc(n_);
        int phase = loc.phase_exp;
        for (size_t l = 0; l < m; l++) {
            bool x = loc.x.get(l), z = loc.z.get(l);
            if (x && z) phase += 1;
            if (x) acc = pauli_product(acc, ximg[l]);
            if (z) acc = pauli_product(acc, zimg[l]);
        }
        acc.phase_exp = (acc.phase_exp + phase) & 3;
        return acc;
    };
    for (size_t l = 0; l < m; l++) {
        set_column(qs[l], image_of(local.column(l)));
        set_column(n_ + qs[l], image_of(local.column(m + l)));
    }
}

bool IsometryTableau::is_valid() const {
    size_t c = num_cols();
    if (rank(t_) != c) return false;
    std::vector<PauliOp> cols;
    for (size_t j = 0; j < c; j++) cols.push_back(column(j));
    for (size_t a = 0; a < c; a++) {
        for (size_t b = a + 1; b < c; b++) {
            bool expect = a < k_ && b == n_ + a;
            if (symplectic_product(cols[a], cols[b]) != expect) return false;
        }
    }
    return true;
}

void IsometryTableau::free_column_add(size_t src, size_t dst) {
    if (src < k_ || src >= n_ || dst >= num_cols() || dst == src) {
        throw CliffError(ErrorCode::BadColumn,
                         "free_column_add(" + std::to_string(src) + ", " + std::to_string(dst) + ")");
    }
    set_column(dst, pauli_product(column(dst), column(src)));
}

std::vector<Gate> IsometryTableau::make_B_invertible() {
    // Rows P of B spanning its row space keep their X rows; H on the rest
    // brings in Z rows that complete B to an invertible matrix.
    std::vector<BitVector> reduced;
    std::vector<size_t> pivots;
    std::vector<Gate> layer;
    for (size_t q = 0; q < n_; q++) {
        BitVector v(n_);
        for (size_t j = 0; j < n_; j++) v.set(j, t_.get(n_ + q, j));
        for (size_t t = 0; t < reduced.size(); t++) {
            if (v.get(pivots[t])) v ^= reduced[t];
        }
        size_t p = v.first_one();
        if (p != BitVector::npos) {
            reduced.push_back(v);
            pivots.push_back(p);
        } else {
            layer.push_back(make_gate(GateKind::H, q));
        }
    }
    for (const auto &g : layer) apply_gate_right(g);
    return layer;
}

IsometryTableau IsometryTableau::canonical() const {
    IsometryTableau c = *this;
    size_t next = k_;
    for (size_t row = 0; row < 2 * n_ && next < n_; row++) {
        size_t piv = BitVector::npos;
        for (size_t j = next; j < n_; j++) {
            if (c.t_.get(row, j)) {
                piv = j;
                break;
            }
        }
        if (piv == BitVector::npos) continue;
        if (piv != next) {
            c.t_.swap_cols(piv, next);
            bool rp = c.r_.get(piv);
            c.r_.set(piv, c.r_.get(next));
            c.r_.set(next, rp);
        }
        for (size_t d = 0; d < c.num_cols(); d++) {
            if (d != next && c.t_.get(row, d)) c.free_column_add(next, d);
        }
        next++;
    }
    return c;
}

std::string IsometryTableau::to_text() const {
    std::ostringstream out;
    out << n_ << " " << k_ << "\n";
    for (size_t i = 0; i < 2 * n_; i++) {
        for (size_t j = 0; j < num_cols(); j++) out << (j ? " " : "") << (t_.get(i, j) ? 1 : 0);
        out << "\n";
    }
    for (size_t j = 0; j < num_cols(); j++) out << (j ? " " : "") << (r_.get(j) ? 1 : 0);
    out << "\n";
    return out.str();
}

IsometryTableau IsometryTableau::from_text(const std::string &text) {
    std::istringstream in(text);
    long n = -1, k = -1;
    if (!(in >> n >> k) || n < 0 || k < 0 || k > n) throw CliffError(ErrorCode::ParseError, "bad tableau header");
    IsometryTableau t(static_cast<size_t>(n), static_cast<size_t>(k));
    // Bits may be spaced out or packed into one word per row.
    auto read_bit = [&]() {
        char c = 0;
        if (!(in >> c) || (c != '0' && c != '1')) throw CliffError(ErrorCode::ParseError, "bad tableau bit");
        return c == '1';
    };
    for (size_t i = 0; i < 2 * t.n_; i++) {
        for (size_t j = 0; j < t.num_cols(); j++) t.t_.set(i, j, read_bit());
    }
    for (size_t j = 0; j < t.num_cols(); j++) t.r_.set(j, read_bit());
    return t;
}

bool equivalent(const IsometryTableau &a, const IsometryTableau &b) {
    if (a.n() != b.n() || a.k() != b.k()) return false;
    return a.canonical() == b.canonical();
}

IsometryTableau replay_tableau(const Circuit &c) {
    IsometryTableau t = IsometryTableau::identity(c.n, c.k);
    for (Gate g : c.gates) {
        g.side = Side::Output;
        t.apply_gate_right(g);
    }
    return t;
}

}  // namespace cliffsyn
