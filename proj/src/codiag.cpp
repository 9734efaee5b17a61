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


#include "cliffsyn/codiag.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "cliffsyn/error.hpp"
#include "cliffsyn/tableau.hpp"

namespace cliffsyn {

namespace {

/// Incremental GF(2) span with reduced basis vectors keyed by pivot.
class Span {
   public:
    bool add(BitVector v) {
        reduce(v);
        if (v.is_zero()) return false;
        basis_.push_back(v);
        return true;
    }
    bool contains(BitVector v) const {
        reduce(v);
        return v.is_zero();
    }
    size_t size() const { return basis_.size(); }

   private:
    void reduce(BitVector &v) const {
        for (const auto &b : basis_) {
            if (v.get(b.first_one())) v ^= b;
        }
    }
    std::vector<BitVector> basis_;
};

/// Basis of {v : W·v = 0}.
std::vector<BitVector> kernel(const BitMatrix &w) {
    BitMatrix m = w;
    size_t cols = m.cols();
    std::vector<size_t> pivot_of_row;
    std::vector<char> is_pivot(cols, 0);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < m.rows(); c++) {
        size_t p = r;
        while (p < m.rows() && !m.get(p, c)) p++;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        for (size_t i = 0; i < m.rows(); i++) {
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        }
        pivot_of_row.push_back(c);
        is_pivot[c] = 1;
        r++;
    }
    std::vector<BitVector> out;
    for (size_t f = 0; f < cols; f++) {
        if (is_pivot[f]) continue;
        BitVector v(cols);
        v.set(f, true);
        for (size_t i = 0; i < pivot_of_row.size(); i++) {
            if (m.get(i, f)) v.set(pivot_of_row[i], true);
        }
        out.push_back(v);
    }
    return out;
}

/// Rows 0..n−1 hold Z, rows n..2n−1 hold X; one column per operator.
BitMatrix stack(const BitMatrix &z, const BitMatrix &x) {
    size_t n = z.rows();
    BitMatrix zx(2 * n, z.cols());
    zx.set_block(0, 0, z);
    zx.set_block(n, 0, x);
    return zx;
}

void apply_binary(BitMatrix &zx, const Gate &g) {
    BitVector r(zx.cols());
    conjugate_columns(zx, r, zx.rows() / 2, g);
}

void apply_binary(BitMatrix &zx, const std::vector<Gate> &gs) {
    BitVector r(zx.cols());
    for (const auto &g : gs) conjugate_columns(zx, r, zx.rows() / 2, g);
}

/// Right-multiplies by X_k⁻¹ so the first k X rows become I.
void normalize_xk(BitMatrix &zx) {
    size_t n = zx.rows() / 2, k = zx.cols();
    BitMatrix xk = zx.block(n, 0, k, k);
    zx = zx * invert(xk);
}

bool lower_x_zero(const BitMatrix &zx) {
    size_t n = zx.rows() / 2, k = zx.cols();
    for (size_t q = k; q < n; q++) {
        if (!zx.row(n + q).is_zero()) return false;
    }
    return true;
}

/// One pass of the pipeline under a fixed qubit preference order; the gates
/// act on the original qubit labels.
std::vector<Gate> run_pipeline(const PauliTableau &pt, const std::vector<size_t> &order, CodiagVariant variant,
                               size_t isd_iters, uint64_t seed) {
    size_t n = pt.n, k = pt.k;
    std::vector<Gate> out;
    if (k == 0) return out;
    BitMatrix phys = stack(pt.Z, pt.X);

    // Step 1. Independent X rows first, then H on qubits whose Z row extends them.
    Span span;
    std::vector<char> chosen(n, 0);
    for (size_t q : order) {
        if (span.size() < k && span.add(phys.row(n + q))) chosen[q] = 1;
    }
    for (size_t q : order) {
        if (span.size() == k) break;
        if (!chosen[q] && span.add(phys.row(q))) {
            chosen[q] = 1;
            out.push_back(make_gate(GateKind::H, q));
        }
    }
    if (span.size() < k) throw CliffError(ErrorCode::DependentColumns, "X part cannot reach full rank");
    apply_binary(phys, out);

    // Logical wire l is physical qubit perm[l]; the chosen ones come first.
    std::vector<size_t> perm;
    for (size_t q : order) {
        if (chosen[q]) perm.push_back(q);
    }
    for (size_t q : order) {
        if (!chosen[q]) perm.push_back(q);
    }
    BitMatrix zx(2 * n, k);
    for (size_t l = 0; l < n; l++) {
        zx.row(l) = phys.row(perm[l]);
        zx.row(n + l) = phys.row(n + perm[l]);
    }
    normalize_xk(zx);

    // Step 2.
    std::vector<Gate> ops;
    if (variant == CodiagVariant::Syndrome) {
        ops = zero_lower_x_syndrome(zx.block(0, 0, n, k), zx.block(n, 0, n, k), isd_iters, seed);
    } else {
        ops = zero_lower_x_matching(zx.block(n, 0, n, k));
    }
    apply_binary(zx, ops);
    if (!lower_x_zero(zx)) throw CliffError(ErrorCode::VerificationFailed, "X_{n-k} not cleared");

    // Step 3 is free. Step 4 works on the symmetric Z_k.
    normalize_xk(zx);
    BitMatrix zk = zx.block(0, 0, k, k);
    if (!zk.is_symmetric()) throw CliffError(ErrorCode::NonCommuting, "Z_k not symmetric");
    std::vector<Gate> graph_ops = variant == CodiagVariant::Syndrome ? graph_zeroing_syndrome(zk, isd_iters, seed)
                                                                       : graph_zeroing_greedy_depth(zk);
    ops.insert(ops.end(), graph_ops.begin(), graph_ops.end());

    // Step 5.
    for (size_t q = 0; q < k; q++) ops.push_back(make_gate(GateKind::H, q));

    for (Gate g : ops) {
        g.q0 = perm[g.q0];
        if (g.two_qubit()) g.q1 = perm[g.q1];
        out.push_back(g);
    }
    return out;
}

bool is_z_word(const PauliOp &p) { return p.x.is_zero(); }

bool cancels(const Gate &a, const Gate &b) {
    if (a.two_qubit() != b.two_qubit()) return false;
    if (a.two_qubit()) {
        bool same = a.q0 == b.q0 && a.q1 == b.q1;
        bool flipped = a.q0 == b.q1 && a.q1 == b.q0;
        return a.kind == b.kind && (same || (flipped && a.kind != GateKind::CNOT));
    }
    if (a.q0 != b.q0) return false;
    if (a.kind == GateKind::S) return b.kind == GateKind::Sdg;
    if (a.kind == GateKind::Sdg) return b.kind == GateKind::S;
    return a.kind == b.kind && a.kind != GateKind::RxHalfPi;
}

/// Drops gate pairs that meet with nothing between them on their wires.
std::vector<Gate> cancel_pairs(const std::vector<Gate> &gates) {
    std::vector<Gate> out;
    for (const auto &g : gates) {
        auto touches = [&](const Gate &h) {
            bool a = h.q0 == g.q0 || (h.two_qubit() && h.q1 == g.q0);
            bool b = g.two_qubit() && (h.q0 == g.q1 || (h.two_qubit() && h.q1 == g.q1));
            return a || b;
        };
        size_t i = out.size();
        while (i > 0 && !touches(out[i - 1])) i--;
        if (i > 0 && cancels(out[i - 1], g)) {
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
        } else {
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace

PauliTableau PauliTableau::from_paulis(const std::vector<PauliOp> &ps) {
    PauliTableau pt;
    pt.k = ps.size();
    pt.n = ps.empty() ? 0 : ps[0].n;
    pt.Z = BitMatrix(pt.n, pt.k);
    pt.X = BitMatrix(pt.n, pt.k);
    pt.signs = BitVector(pt.k);
    for (size_t j = 0; j < pt.k; j++) {
        const PauliOp &p = ps[j];
        if (p.n != pt.n) throw CliffError(ErrorCode::LengthMismatch, "Pauli words differ in length");
        if (p.phase_exp & 1) throw CliffError(ErrorCode::BadStructure, "Pauli " + p.to_string() + " is not Hermitian");
        for (size_t q = 0; q < pt.n; q++) {
            pt.Z.set(q, j, p.z.get(q));
            pt.X.set(q, j, p.x.get(q));
        }
        pt.signs.set(j, p.phase_exp == 2);
    }
    return pt;
}

PauliOp PauliTableau::column(size_t j) const {
    PauliOp p(n);
    for (size_t q = 0; q < n; q++) {
        p.z.set(q, Z.get(q, j));
        p.x.set(q, X.get(q, j));
    }
    p.phase_exp = signs.get(j) ? 2 : 0;
    return p;
}

std::vector<PauliOp> PauliTableau::columns() const {
    std::vector<PauliOp> out;
    for (size_t j = 0; j < k; j++) out.push_back(column(j));
    return out;
}

const char *variant_name(CodiagVariant v) { return v == CodiagVariant::Syndrome ? "syndrome" : "matching"; }

CodiagVariant parse_variant(const std::string &s) {
    if (s == "syndrome") return CodiagVariant::Syndrome;
    if (s == "matching") return CodiagVariant::Matching;
    throw CliffError(ErrorCode::BadConfig, "unknown codiag variant '" + s + "'");
}

void validate_commuting_set(const PauliTableau &pt) {
    if (pt.k > pt.n) throw CliffError(ErrorCode::TooManyPaulis, "more operators than qubits");
    std::vector<PauliOp> cols = pt.columns();
    for (size_t i = 0; i < pt.k; i++) {
        for (size_t j = i + 1; j < pt.k; j++) {
            if (symplectic_product(cols[i], cols[j])) {
                throw CliffError(ErrorCode::NonCommuting,
                                 "operators " + std::to_string(i) + " and " + std::to_string(j) + " anticommute");
            }
        }
    }
    if (rank(stack(pt.Z, pt.X)) != pt.k) throw CliffError(ErrorCode::DependentColumns, "operators are dependent");
}

PauliTableau complete_to_full(const PauliTableau &pt) {
    validate_commuting_set(pt);
    if (pt.k == pt.n) throw CliffError(ErrorCode::BadDims, "set already has n operators");
    size_t n = pt.n;
    BitMatrix zx = stack(pt.Z, pt.X);
    std::vector<BitVector> cols;
    Span span;
    for (size_t j = 0; j < pt.k; j++) {
        cols.push_back(zx.col(j));
        span.add(cols.back());
    }
    while (cols.size() < n) {
        // v = (z, x) commutes with (z', x') when z·x' + x·z' = 0.
        BitMatrix w(cols.size(), 2 * n);
        for (size_t i = 0; i < cols.size(); i++) {
            for (size_t q = 0; q < n; q++) {
                w.set(i, q, cols[i].get(n + q));
                w.set(i, n + q, cols[i].get(q));
            }
        }
        bool grew = false;
        for (const auto &v : kernel(w)) {
            if (span.add(v)) {
                cols.push_back(v);
                grew = true;
                break;
            }
        }
        if (!grew) throw CliffError(ErrorCode::Unsolvable, "no isotropic extension");
    }
    PauliTableau out;
    out.n = n;
    out.k = n;
    out.Z = BitMatrix(n, n);
    out.X = BitMatrix(n, n);
    out.signs = BitVector(n);
    for (size_t j = 0; j < n; j++) {
        for (size_t q = 0; q < n; q++) {
            out.Z.set(q, j, cols[j].get(q));
            out.X.set(q, j, cols[j].get(n + q));
        }
        if (j < pt.k) out.signs.set(j, pt.signs.get(j));
    }
    return out;
}

std::vector<Gate> zero_lower_x_syndrome(const BitMatrix &z, const BitMatrix &x, size_t isd_iters, uint64_t seed) {
    size_t n = x.rows(), k = x.cols();
    if (z.rows() != n || z.cols() != k) throw CliffError(ErrorCode::DimMismatch, "Z and X shapes differ");
    if (x.block(0, 0, k, k) != BitMatrix::identity(k)) throw CliffError(ErrorCode::BadStructure, "X_k must be I");
    const BitMatrix zx0 = stack(z, x);
    std::vector<Gate> ops;
    // Single-qubit gates sit in front; later insertions go after them so the
    // rows they change never pass through another H or Rx.
    size_t front = 0;
    for (size_t q = k; q < n; q++) {
        struct Trial {
            BitVector s;
            std::optional<GateKind> gate;
        };
        const BitVector &xq = zx0.row(n + q), &zq = zx0.row(q);
        Trial trials[3] = {{xq, std::nullopt}, {zq, GateKind::H}, {xq ^ zq, GateKind::RxHalfPi}};
        if (xq.is_zero()) continue;

        // Candidate parities: canonical rows of X_k at the end, then every
        // value a cleared row took after the front layer.
        std::vector<BitVector> rows;
        std::vector<std::pair<size_t, size_t>> where;  // (position, source wire)
        std::map<std::vector<uint64_t>, size_t> seen;
        auto offer = [&](const BitVector &v, size_t pos, size_t src) {
            if (v.is_zero() || !seen.emplace(v.words(), rows.size()).second) return;
            rows.push_back(v);
            where.emplace_back(pos, src);
        };
        for (size_t j = 0; j < k; j++) offer(BitVector::unit(k, j), ops.size(), j);
        BitMatrix zx = zx0;
        for (size_t p = 0; p <= ops.size(); p++) {
            if (p >= front) {
                for (size_t w = k; w < q; w++) offer(zx.row(n + w), p, w);
            }
            if (p < ops.size()) apply_binary(zx, ops[p]);
        }
        BitMatrix h = BitMatrix::from_rows(rows, k);

        size_t best = 0;
        SyndromeSolution best_sol;
        for (size_t t = 0; t < 3; t++) {
            if (trials[t].s.is_zero()) {
                best = t;
                best_sol = {BitVector(rows.size()), 0};
                break;
            }
            SyndromeSolution sol = syndrome_decode(h, trials[t].s, isd_iters, seed + q * 3 + t);
            if (t == 0 || sol.weight < best_sol.weight) {
                best = t;
                best_sol = sol;
            }
        }
        std::vector<std::pair<size_t, size_t>> chosen;
        for (size_t r = 0; r < rows.size(); r++) {
            if (best_sol.x.get(r)) chosen.push_back(where[r]);
        }
        std::stable_sort(chosen.begin(), chosen.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
        for (const auto &[pos, src] : chosen) {
            ops.insert(ops.begin() + static_cast<std::ptrdiff_t>(pos), make_gate(GateKind::CNOT, src, q));
        }
        if (trials[best].gate) {
            ops.insert(ops.begin(), make_gate(*trials[best].gate, q));
            front++;
        }
        BitMatrix check = zx0;
        apply_binary(check, ops);
        if (!check.row(n + q).is_zero()) throw CliffError(ErrorCode::Unsolvable, "X row not cleared");
    }
    return ops;
}

std::vector<Gate> zero_lower_x_matching(const BitMatrix &x) {
    size_t n = x.rows(), k = x.cols();
    BitMatrix xk = x.block(0, 0, k, k);
    if (rank(xk) != k) throw CliffError(ErrorCode::SingularXk, "X_k is singular");
    // Row r of b is lower wire k + r; CNOT(c, t) inside X_k adds column t of b to column c.
    BitMatrix b = x.block(k, 0, n - k, k) * invert(xk);
    std::vector<Gate> ops;
    while (!b.is_zero()) {
        std::vector<char> used_row(n - k, 0), used_col(k, 0);
        while (true) {
            size_t best_gain = 0;
            Gate best_op;
            for (size_t r = 0; r < n - k; r++) {
                if (used_row[r]) continue;
                size_t before = b.row(r).popcount();
                for (size_t s = 0; s < n - k; s++) {
                    if (s == r || used_row[s]) continue;
                    size_t after = (b.row(r) ^ b.row(s)).popcount();
                    if (before > after && before - after > best_gain) {
                        best_gain = before - after;
                        best_op = make_gate(GateKind::CNOT, k + s, k + r);
                    }
                }
            }
            for (size_t c = 0; c < k; c++) {
                if (used_col[c]) continue;
                BitVector cc = b.col(c);
                size_t before = cc.popcount();
                for (size_t t = 0; t < k; t++) {
                    if (t == c || used_col[t]) continue;
                    size_t after = (cc ^ b.col(t)).popcount();
                    if (before > after && before - after > best_gain) {
                        best_gain = before - after;
                        best_op = make_gate(GateKind::CNOT, c, t);
                    }
                }
            }
            // A single shift already removes one entry.
            if (best_gain <= 1) break;
            size_t c = best_op.q0, t = best_op.q1;
            if (c >= k) {
                b.xor_row(t - k, c - k);
                used_row[t - k] = used_row[c - k] = 1;
            } else {
                b.xor_col(c, t);
                used_col[c] = used_col[t] = 1;
            }
            ops.push_back(best_op);
        }
        std::vector<size_t> rows, cols;
        for (size_t r = 0; r < n - k; r++) {
            if (!used_row[r]) rows.push_back(r);
        }
        for (size_t c = 0; c < k; c++) {
            if (!used_col[c]) cols.push_back(c);
        }
        for (const auto &[r, c] : bipartite_matching(b, rows, cols)) {
            b.flip(r, c);
            ops.push_back(make_gate(GateKind::CNOT, c, k + r));
        }
    }
    return ops;
}

CodiagResult codiagonalize(const PauliTableau &pt, CodiagVariant variant, size_t restarts, size_t isd_iters,
                           uint64_t seed) {
    validate_commuting_set(pt);
    size_t n = pt.n;
    std::vector<PauliTableau> instances = {pt};
    if (pt.k < n && pt.k > 0) instances.push_back(complete_to_full(pt));
    restarts = std::max<size_t>(restarts, 1);

    std::vector<Gate> best;
    CircuitMetrics best_m;
    bool have = false;
    auto better = [&](const CircuitMetrics &m) {
        if (!have) return true;
        if (variant == CodiagVariant::Syndrome) {
            return m.two_qubit_count < best_m.two_qubit_count ||
                   (m.two_qubit_count == best_m.two_qubit_count && m.two_qubit_depth < best_m.two_qubit_depth);
        }
        return m.two_qubit_depth < best_m.two_qubit_depth ||
               (m.two_qubit_depth == best_m.two_qubit_depth && m.two_qubit_count < best_m.two_qubit_count);
    };
    std::mt19937_64 rng(seed);
    std::vector<size_t> order(n);
    for (size_t r = 0; r < restarts; r++) {
        std::iota(order.begin(), order.end(), size_t{0});
        if (r > 0) std::shuffle(order.begin(), order.end(), rng);
        for (const auto &inst : instances) {
            std::vector<Gate> gates = cancel_pairs(run_pipeline(inst, order, variant, isd_iters, seed + r));
            CircuitMetrics m = compute_metrics(gates, n);
            if (better(m)) {
                best = std::move(gates);
                best_m = m;
                have = true;
            }
        }
    }

    CodiagResult res;
    res.circuit = Circuit{n, n, best, Layout::AllToAll};
    for (const auto &p : pt.columns()) {
        PauliOp q = conjugate_pauli(p, best);
        if (!is_z_word(q)) throw CliffError(ErrorCode::VerificationFailed, "image of " + p.to_string() + " has X part");
        res.z_words.push_back(q);
    }
    res.report = make_report(res.circuit, std::string("codiag-") + variant_name(variant), seed, restarts);
    return res;
}

}  // namespace cliffsyn
