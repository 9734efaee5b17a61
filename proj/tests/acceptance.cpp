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


// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cliffsyn/codiag.hpp"
#include "cliffsyn/error.hpp"
#include "cliffsyn/io.hpp"
#include "cliffsyn/simcheck.hpp"
#include "cliffsyn/synth.hpp"
#include "test_util.hpp"

using namespace cliffsyn;
using cliffsyn::testing::all_gates;
using cliffsyn::testing::all_paulis;

namespace {

const Algorithm kAll[] = {Algorithm::NfCz,     Algorithm::NfCnot,      Algorithm::NfAlt1, Algorithm::NfAlt2,
                          Algorithm::Syndrome, Algorithm::GreedyDepth, Algorithm::Lnn};

bool applicable(Algorithm a, size_t n, size_t k) {
    if (a == Algorithm::Syndrome || a == Algorithm::GreedyDepth) return k == 0;
    if (a == Algorithm::NfAlt1 || a == Algorithm::NfAlt2) return k == n;
    return true;
}

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome round_trip() {
    auto t0 = std::chrono::steady_clock::now();
    size_t runs = 0, bad = 0;
    for (Algorithm a : kAll) {
        for (size_t n = 2; n <= 8; n++) {
            for (size_t k = 0; k <= n; k++) {
                if (!applicable(a, n, k)) continue;
                for (uint64_t s = 0; s < 200; s++) {
                    IsometryTableau t = random_clifford(n, k, s * 977 + n * 31 + k);
                    IsometryTableau back = replay_tableau(synthesize(t, a));
                    bool ok = k == n ? back == t : equivalent(back, t);
                    runs++;
                    bad += !ok;
                }
            }
        }
    }
    double secs = seconds_since(t0);
    return {bad == 0 && secs < 120,
            std::to_string(runs) + " instances, " + std::to_string(bad) + " mismatches, " + std::to_string(secs) + " s"};
}

Outcome dense_equivalence() {
    size_t bad = 0, runs = 0;
    std::mt19937_64 rng(2);
    for (Algorithm a : kAll) {
        for (size_t i = 0; i < 50; i++) {
            size_t n = 1 + rng() % 6, k = rng() % (n + 1);
            if (a == Algorithm::Syndrome || a == Algorithm::GreedyDepth) k = 0;
            if (a == Algorithm::NfAlt1 || a == Algorithm::NfAlt2) k = n;
            IsometryTableau t = random_clifford(n, k, 5000 + i * 13 + n);
            DenseIsometry v = dense_isometry(synthesize(t, a));
            bool ok = is_isometry(v) && equal_up_to_global_phase(v, dense_from_tableau(t));
            runs++;
            bad += !ok;
        }
    }
    return {bad == 0, std::to_string(runs) + " instances, " + std::to_string(bad) + " mismatches"};
}

Outcome lnn_bound() {
    size_t bad = 0, runs = 0, worst_slack = SIZE_MAX;
    for (size_t n = 3; n <= 16; n++) {
        for (size_t k : {size_t{0}, n / 2, n}) {
            for (uint64_t s = 0; s < 50; s++) {
                Circuit c = synthesize(random_clifford(n, k, s * 7919 + n * 101 + k), Algorithm::Lnn);
                CircuitMetrics m = c.metrics();
                size_t bound = 4 * n + 3 * k;
                bool ok = m.lnn_valid && m.two_qubit_depth <= bound && (k != n || m.two_qubit_depth <= 7 * n);
                worst_slack = std::min(worst_slack, bound >= m.two_qubit_depth ? bound - m.two_qubit_depth : 0);
                runs++;
                bad += !ok;
            }
        }
    }
    return {bad == 0, std::to_string(runs) + " instances, " + std::to_string(bad) + " violations, min slack " +
                          std::to_string(worst_slack)};
}

bool amplitude_matches(const GraphForm &gf) {
    size_t n = gf.n, k = gf.k;
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
    DenseIsometry target0{n, 0, target.column(0)};
    for (size_t code = 0; code < (size_t{1} << (2 * n)); code++) {
        PauliOp p(n);
        for (size_t q = 0; q < n; q++) {
            p.z.set(q, (code >> (2 * q)) & 1);
            p.x.set(q, (code >> (2 * q + 1)) & 1);
        }
        StateVector c0 = formula.column(0);
        apply_pauli_dense(c0, p);
        if (!equal_up_to_global_phase(DenseIsometry{n, 0, c0}, target0)) continue;
        DenseIsometry framed = formula;
        for (size_t x = 0; x < (size_t{1} << k); x++) {
            StateVector col = formula.column(x);
            apply_pauli_dense(col, p);
            for (size_t y = 0; y < col.size(); y++) framed.at(y, x) = col[y];
        }
        if (equal_up_to_global_phase(framed, target)) return true;
    }
    return false;
}

Outcome amplitude_oracle() {
    size_t bad = 0;
    for (uint64_t s = 0; s < 100; s++) {
        size_t n = 1 + s % 6, k = (s / 6) % (n + 1);
        bad += !amplitude_matches(to_graph_form(random_clifford(n, k, 700 + s)));
    }
    return {bad == 0, "100 graph forms, " + std::to_string(bad) + " mismatches"};
}

Outcome sandwich() {
    size_t bad = 0, runs = 0;
    for (uint64_t s = 0; s < 100; s++) {
        size_t n = 2 + s % 7, k = (s / 7) % (n + 1);
        GraphForm gf = to_graph_form(random_clifford(n, k, 900 + s));
        for (Circuit c : {synth_normal_cz(gf), synth_normal_cnot(gf)}) {
            bool holds = verify_pp_sandwich(c, gf);
            size_t at = 0;
            while (c.gates[at].kind != GateKind::H) at++;
            c.gates.insert(c.gates.begin() + static_cast<std::ptrdiff_t>(at + n), make_gate(GateKind::CZ, 0, 1));
            bool broken = !verify_pp_sandwich(c, gf);
            runs++;
            bad += !(holds && broken);
        }
    }
    return {bad == 0, std::to_string(runs) + " circuits, " + std::to_string(bad) + " failures"};
}

bool dense_maps(const Circuit &c, const PauliOp &p, const PauliOp &q) {
    size_t dim = size_t{1} << c.n;
    for (size_t b = 0; b < dim; b++) {
        StateVector lhs(dim), rhs(dim);
        lhs[b] = rhs[b] = 1;
        apply_pauli_dense(lhs, p);
        for (const auto &g : c.gates) {
            apply_gate_dense(lhs, g);
            apply_gate_dense(rhs, g);
        }
        apply_pauli_dense(rhs, q);
        for (size_t i = 0; i < dim; i++) {
            if (std::abs(lhs[i] - rhs[i]) > 1e-9) return false;
        }
    }
    return true;
}

Outcome codiag_exactness() {
    size_t bad = 0, dense_checked = 0;
    for (uint64_t s = 0; s < 100; s++) {
        size_t n = 1 + s % 12, k = 1 + (s / 12) % n;
        auto ps = random_commuting_set(n, k, 1200 + s);
        PauliTableau pt = PauliTableau::from_paulis(ps);
        for (auto v : {CodiagVariant::Syndrome, CodiagVariant::Matching}) {
            CodiagResult r = codiagonalize(pt, v, 10, 100, s);
            bool ok = r.z_words.size() == k;
            for (size_t j = 0; ok && j < k; j++) {
                PauliOp img = conjugate_pauli(ps[j], r.circuit.gates);
                ok = img.x.is_zero() && img == r.z_words[j];
                if (ok && n <= 5) ok = dense_maps(r.circuit, ps[j], r.z_words[j]);
            }
            dense_checked += n <= 5;
            bad += !ok;
        }
    }
    return {bad == 0, "200 runs, " + std::to_string(dense_checked) + " dense-checked, " + std::to_string(bad) +
                          " failures"};
}

Outcome decoder_quality() {
    std::mt19937_64 rng(17);
    size_t invalid = 0, worse = 0, small = 0, optimal = 0;
    for (size_t i = 0; i < 500; i++) {
        size_t n = 1 + rng() % 12, m = 1 + rng() % 16;
        BitMatrix h(m, n);
        for (size_t r = 0; r < m; r++) {
            for (size_t c = 0; c < n; c++) h.set(r, c, rng() & 1);
        }
        BitVector sel(m);
        for (size_t r = 0; r < m; r++) sel.set(r, rng() & 1);
        BitVector s = h.left_mul(sel);
        SyndromeSolution sol = syndrome_decode(h, s, 100, i);
        if (h.left_mul(sol.x) != s || sol.x.popcount() != sol.weight) invalid++;
        auto plain = solve(h.transpose(), s);
        if (!plain || sol.weight > plain->popcount()) worse++;
        if (n <= 10) {
            small++;
            size_t best = SIZE_MAX;
            for (uint64_t mask = 0; mask < (uint64_t{1} << m); mask++) {
                BitVector x(m);
                for (size_t r = 0; r < m; r++) x.set(r, (mask >> r) & 1);
                if (h.left_mul(x) == s) best = std::min<size_t>(best, x.popcount());
            }
            optimal += sol.weight == best;
        }
    }
    double rate = small ? static_cast<double>(optimal) / static_cast<double>(small) : 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "500 instances, %zu invalid, %zu worse than elimination, optimal %zu/%zu (%.1f%%)",
                  invalid, worse, optimal, small, 100 * rate);
    return {invalid == 0 && worse == 0 && rate >= 0.7, buf};
}

Outcome trend() {
    double nfcz = 0, syn_count = 0, syn_depth = 0, greedy = 0;
    for (uint64_t s = 0; s < 40; s++) {
        IsometryTableau t = random_clifford(30, 0, 3000 + s);
        nfcz += static_cast<double>(synthesize(t, Algorithm::NfCz).metrics().two_qubit_count);
        CircuitMetrics m = synthesize(t, Algorithm::Syndrome).metrics();
        syn_count += static_cast<double>(m.two_qubit_count);
        syn_depth += static_cast<double>(m.two_qubit_depth);
        greedy += static_cast<double>(synthesize(t, Algorithm::GreedyDepth).metrics().two_qubit_depth);
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "mean count syndrome %.1f vs nf-cz %.1f; mean depth greedy %.1f vs syndrome %.1f",
                  syn_count / 40, nfcz / 40, greedy / 40, syn_depth / 40);
    return {syn_count <= nfcz && greedy <= syn_depth, buf};
}

Outcome tableau_gates() {
    size_t bad = 0, checks = 0;
    for (size_t n = 1; n <= 3; n++) {
        for (const Gate &g : all_gates(n)) {
            for (const PauliOp &p : all_paulis(n)) {
                IsometryTableau t(n, 0);
                t.set_column(0, p);
                t.apply_gate_right(g);
                checks++;
                bad += !conjugation_matches(g, n, p, t.column(0));
            }
        }
        for (size_t k = 1; k <= n; k++) {
            for (const Gate &g : all_gates(k, Side::Input)) {
                for (uint64_t s = 0; s < 4; s++) {
                    Circuit c = random_clifford_circuit(n, k, s * 31 + n);
                    IsometryTableau t = replay_tableau(c);
                    t.apply_gate_left(g);
                    Gate first = g;
                    first.side = Side::Output;
                    c.gates.insert(c.gates.begin(), first);
                    checks++;
                    bad += !equal_up_to_global_phase(dense_from_tableau(t), dense_isometry(c));
                }
            }
        }
    }
    std::mt19937_64 rng(23);
    size_t invalid = 0;
    IsometryTableau t = random_clifford(7, 4, 1);
    auto out = all_gates(7), in = all_gates(4, Side::Input);
    for (size_t s = 1; s <= 10000; s++) {
        if (rng() % 2) {
            t.apply_gate_left(in[rng() % in.size()]);
        } else {
            t.apply_gate_right(out[rng() % out.size()]);
        }
        if (s % 500 == 0) invalid += !t.is_valid();
    }
    return {bad == 0 && invalid == 0, std::to_string(checks) + " exhaustive checks, " + std::to_string(bad) +
                                          " mismatches; 10000 fuzzed gates, " + std::to_string(invalid) +
                                          " invalid snapshots"};
}

}  // namespace

int main() {
    const std::pair<const char *, std::function<Outcome()>> criteria[] = {
        {"round-trip", round_trip},       {"dense-equivalence", dense_equivalence},
        {"lnn-bound", lnn_bound},         {"amplitude-oracle", amplitude_oracle},
        {"sandwich", sandwich},           {"codiag-exactness", codiag_exactness},
        {"decoder-quality", decoder_quality}, {"trend", trend},
        {"tableau-gates", tableau_gates},
    };
    int failed = 0, index = 0;
    for (const auto &[name, run] : criteria) {
        index++;
        Outcome o;
        try {
            o = run();
        } catch (const CliffError &e) {
            o = {false, std::string("threw ") + e.what()};
        }
        std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
