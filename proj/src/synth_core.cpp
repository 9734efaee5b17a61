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

#include "cliffsyn/error.hpp"
#include "cliffsyn/synth.hpp"

namespace cliffsyn {

IsometryTableau graph_form_target(const GraphForm &gf) {
    IsometryTableau t = gf.tab;
    for (auto it = gf.pre_h.rbegin(); it != gf.pre_h.rend(); ++it) t.apply_gate_right(*it);
    return t;
}

Reducer::Reducer(const GraphForm &gf) : gf_(gf), target_(graph_form_target(gf)), output_(gf.pre_h) {}

Reducer::Reducer(const IsometryTableau &target) : Reducer(to_graph_form(target)) { target_ = target; }

void Reducer::emit(const Gate &g) {
    apply_graph_op(gf_, g);
    (g.side == Side::Input ? input_ : output_).push_back(g);
}

void Reducer::emit(const std::vector<Gate> &gs) {
    for (const auto &g : gs) emit(g);
}

void Reducer::emit_output(GateKind kind, size_t a, size_t b) {
    emit(b == BitVector::npos ? make_gate(kind, a, Side::Output) : make_gate(kind, a, b, Side::Output));
}

void Reducer::emit_input(GateKind kind, size_t a, size_t b) {
    emit(b == BitVector::npos ? make_gate(kind, a, Side::Input) : make_gate(kind, a, b, Side::Input));
}

Circuit Reducer::finish(Layout layout) {
    if (!gf_.is_identity_layout()) throw CliffError(ErrorCode::NotReduced, "graph not in identity layout");
    for (size_t q = 0; q < n(); q++) {
        Gate h = make_gate(GateKind::H, q);
        gf_.tab.apply_gate_right(h);
        output_.push_back(h);
    }
    gf_.tab = gf_.tab.canonical();
    for (const Gate &p : sign_fix(gf_.tab).gates) {
        gf_.tab.apply_gate_right(p);
        output_.push_back(p);
    }
    Circuit c;
    c.n = n();
    c.k = k();
    c.layout = layout;
    c.gates = input_;
    c.gates.insert(c.gates.end(), output_.rbegin(), output_.rend());
    if (!equivalent(replay_tableau(c), target_)) {
        throw CliffError(ErrorCode::VerificationFailed, "replayed circuit differs from the target");
    }
    return c;
}

Circuit sign_fix(const IsometryTableau &t) {
    size_t n = t.n(), k = t.k();
    if (!(t.T() == IsometryTableau::identity(n, k).T())) {
        throw CliffError(ErrorCode::NotReduced, "sign_fix needs T = I");
    }
    Circuit c;
    c.n = n;
    c.k = k;
    for (size_t q = 0; q < n; q++) {
        bool z = t.r().get(q), x = q < k && t.r().get(n + q);
        // X anticommutes with Z, Z with X, Y with both.
        if (z && x) c.add(make_gate(GateKind::Y, q));
        else if (z) c.add(make_gate(GateKind::X, q));
        else if (x) c.add(make_gate(GateKind::Z, q));
    }
    return c;
}

namespace {

bool is_phase_gate(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z: return true;
        default: return false;
    }
}

/// |x⟩ ↦ i^{q(x)} |Ax⟩ up to Paulis; Γ is q's matrix over GF(2).
struct PhasePoly {
    std::vector<BitVector> wires;
    BitMatrix gamma;

    PhasePoly(size_t n, size_t m) : gamma(m, m) {
        for (size_t w = 0; w < n; w++) wires.push_back(w < m ? BitVector::unit(m, w) : BitVector(m));
    }

    void add_outer(const BitVector &a, const BitVector &b) {
        for (size_t i = 0; i < gamma.rows(); i++) {
            if (a.get(i)) gamma.row(i) ^= b;
        }
    }

    void apply(const Gate &g) {
        switch (g.kind) {
            case GateKind::CNOT: wires[g.q1] ^= wires[g.q0]; break;
            case GateKind::S:
            case GateKind::Sdg: add_outer(wires[g.q0], wires[g.q0]); break;
            case GateKind::CZ:
                add_outer(wires[g.q0], wires[g.q1]);
                add_outer(wires[g.q1], wires[g.q0]);
                break;
            default: break;
        }
    }

    BitMatrix linear(size_t rows) const {
        BitMatrix a(rows, gamma.rows());
        for (size_t w = 0; w < rows; w++) a.row(w) = wires[w];
        return a;
    }
};

}  // namespace

bool verify_pp_sandwich(const Circuit &c, const GraphForm &gf) {
    size_t n = gf.n, k = gf.k;
    if (c.n != n || c.k != k) throw CliffError(ErrorCode::BadStructure, "circuit shape differs from graph form");
    const auto &gs = c.gates;
    size_t i = 0;
    PhasePoly p2(n, k);
    for (; i < gs.size() && gs[i].kind != GateKind::H; i++) {
        if (!is_phase_gate(gs[i].kind)) throw CliffError(ErrorCode::BadStructure, "non-phase gate " + gs[i].to_string());
        p2.apply(gs[i]);
    }
    std::vector<char> seen(n, 0);
    for (size_t m = 0; m < n; m++, i++) {
        if (i >= gs.size() || gs[i].kind != GateKind::H || seen[gs[i].q0]) {
            throw CliffError(ErrorCode::BadStructure, "missing full H layer");
        }
        seen[gs[i].q0] = 1;
    }
    PhasePoly p1(n, n);
    for (; i < gs.size() && gs[i].kind != GateKind::H; i++) {
        if (!is_phase_gate(gs[i].kind)) throw CliffError(ErrorCode::BadStructure, "non-phase gate " + gs[i].to_string());
        p1.apply(gs[i]);
    }
    std::vector<size_t> tail, pre;
    for (; i < gs.size(); i++) {
        if (gs[i].kind != GateKind::H) throw CliffError(ErrorCode::BadStructure, "gate after the final H layer");
        tail.push_back(gs[i].q0);
    }
    for (const auto &g : gf.pre_h) pre.push_back(g.q0);
    std::sort(tail.begin(), tail.end());
    std::sort(pre.begin(), pre.end());
    if (tail != pre) throw CliffError(ErrorCode::BadStructure, "final H layer differs from the extraction layer");

    for (size_t w = k; w < n; w++) {
        if (!p2.wires[w].is_zero()) return false;
    }
    BitMatrix a2 = p2.linear(k);
    if (!(p2.gamma == gf.Gk())) return false;
    BitMatrix a1;
    try {
        a1 = invert(p1.linear(n));
    } catch (const CliffError &) {
        return false;
    }
    if (!(a1.transpose() * p1.gamma * a1 == gf.Gn())) return false;
    BitMatrix lhs(k, n);
    lhs.set_block(0, 0, a2.transpose());
    return lhs * a1 == gf.Bk();
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::NfCz: return "nf-cz";
        case Algorithm::NfCnot: return "nf-cnot";
        case Algorithm::NfAlt1: return "nf-alt1";
        case Algorithm::NfAlt2: return "nf-alt2";
        case Algorithm::Syndrome: return "syndrome";
        case Algorithm::GreedyDepth: return "greedy-depth";
        case Algorithm::Lnn: return "lnn";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string &name) {
    for (Algorithm a : {Algorithm::NfCz, Algorithm::NfCnot, Algorithm::NfAlt1, Algorithm::NfAlt2,
                        Algorithm::Syndrome, Algorithm::GreedyDepth, Algorithm::Lnn}) {
        if (algorithm_name(a) == name) return a;
    }
    throw CliffError(ErrorCode::BadConfig, "unknown algorithm '" + name + "'");
}

SynthReport make_report(const Circuit &c, const std::string &algorithm, uint64_t seed, size_t restarts) {
    CircuitMetrics m = c.metrics();
    return {m.two_qubit_count, m.two_qubit_depth, algorithm, seed, restarts};
}

Circuit synthesize(const IsometryTableau &t, Algorithm algo, const SynthOptions &opt) {
    switch (algo) {
        case Algorithm::NfCz: return synth_normal_cz(to_graph_form(t));
        case Algorithm::NfCnot: return synth_normal_cnot(to_graph_form(t));
        case Algorithm::NfAlt1: return synth_normal_alt(to_graph_form(t), AltForm::CCzSHSCzC);
        case Algorithm::NfAlt2: return synth_normal_alt(to_graph_form(t), AltForm::CCzSHCzSH);
        case Algorithm::GreedyDepth: return synth_graphstate_greedy_depth(to_graph_form(t));
        case Algorithm::Lnn: return synth_lnn(t);
        case Algorithm::Syndrome: {
            GraphForm gf = to_graph_form(t);
            // Independent seeds; the fewest two-qubit gates wins, earliest seed on ties.
            Circuit best;
            size_t best_count = 0;
            for (size_t r = 0; r < std::max<size_t>(opt.restarts, 1); r++) {
                Circuit c = synth_graphstate_syndrome(gf, opt.isd_iters, opt.seed + r);
                size_t count = c.metrics().two_qubit_count;
                if (r == 0 || count < best_count) {
                    best = std::move(c);
                    best_count = count;
                }
            }
            return best;
        }
    }
    throw CliffError(ErrorCode::BadConfig, "unknown algorithm");
}

}  // namespace cliffsyn
