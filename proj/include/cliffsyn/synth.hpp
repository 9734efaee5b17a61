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


#ifndef CLIFFSYN_SYNTH_HPP
#define CLIFFSYN_SYNTH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffsyn/circuit.hpp"
#include "cliffsyn/graph_form.hpp"
#include "cliffsyn/tableau.hpp"

namespace cliffsyn {

/// A reduction of G to the identity layout in progress. Emitted input gates
/// run first in time, emitted output gates run last and in reverse, so the
/// H layer split off at extraction ends the circuit.
class Reducer {
   public:
    explicit Reducer(const GraphForm &gf);
    explicit Reducer(const IsometryTableau &target);

    const GraphForm &gf() const { return gf_; }
    const BitMatrix &G() const { return gf_.G; }
    size_t n() const { return gf_.n; }
    size_t k() const { return gf_.k; }

    void emit(const Gate &g);
    void emit(const std::vector<Gate> &gs);
    void emit_output(GateKind kind, size_t a, size_t b = BitVector::npos);
    void emit_input(GateKind kind, size_t a, size_t b = BitVector::npos);

    /// Middle H layer, sign-fixing Paulis, assembly and a replay check.
    /// Throws NotReduced before the identity layout, VerificationFailed if
    /// the replay disagrees with the target.
    Circuit finish(Layout layout = Layout::AllToAll);

   private:
    GraphForm gf_;
    IsometryTableau target_;
    std::vector<Gate> input_;
    std::vector<Gate> output_;
};

/// The target tableau the graph form was extracted from (pre_h undone).
IsometryTableau graph_form_target(const GraphForm &gf);

/// One Pauli per qubit clearing r on a tableau whose T is the identity.
/// Throws NotReduced otherwise.
Circuit sign_fix(const IsometryTableau &t);

/// S_k CZ_k | H | C_n CZ_n S_n H_n.
Circuit synth_normal_cz(const GraphForm &gf);
/// S_k C_k S_k | H | C_n S_n C_n S_n H_n with phase blocks split by ldlt_sym.
Circuit synth_normal_cnot(const GraphForm &gf);

enum class AltForm { CCzSHSCzC, CCzSHCzSH };
/// Full operators only (NotFullOperator when k < n).
Circuit synth_normal_alt(const GraphForm &gf, AltForm form);

/// k = 0. Row-by-row zeroing of G_n; each leftover row is a syndrome
/// decoding instance over the parities seen while zeroing the rows above.
Circuit synth_graphstate_syndrome(const GraphForm &gf, size_t isd_iters = 100, uint64_t seed = 0);
/// k = 0. Depth-1 rounds of disjoint row additions, then matched CZ flips.
Circuit synth_graphstate_greedy_depth(const GraphForm &gf);
/// The graph operations (S, CZ, CNOT) those two apply; replaying them on g
/// gives the zero matrix.
std::vector<Gate> graph_zeroing_syndrome(const BitMatrix &g, size_t isd_iters = 100, uint64_t seed = 0);
std::vector<Gate> graph_zeroing_greedy_depth(const BitMatrix &g);

/// Output-side emissions that zero G_n on a line, two-qubit depth ≤ 2n:
/// n layers of 2-CNOT boxes with S gates placed by an exact linear solve.
std::vector<Gate> cz_lnn_depth2n(const BitMatrix &gn);
/// Output-side CNOT emissions on a line reducing A = B_kᵀ (n × k, rank k)
/// to [I_k; 0]: a depth-2n network to [N; 0] with N northwest triangular,
/// then a k-layer box network. With a payload, Rx gates are placed in the
/// second network so that G_k ← G_k ⊕ Σ uuᵀ vanishes; diagonal leftovers
/// come back as input-side S gates in the second member.
struct KutinResult {
    std::vector<Gate> output;
    std::vector<Gate> input;
};
KutinResult kutin_sort(const BitMatrix &a, const std::optional<BitMatrix> &payload = std::nullopt);
/// Two-qubit depth ≤ 4n + 3k on a line.
Circuit synth_lnn(const IsometryTableau &t);

/// c must read P₂ | H^{⊗n} | P₁ | pre_h with P₁, P₂ over {CNOT, CZ, S, Sdg}
/// plus Paulis (BadStructure otherwise). Checks Γ₂ = G_k, Γ₁ = G_n and
/// [A₂ᵀ 0]A₁ = B_k.
bool verify_pp_sandwich(const Circuit &c, const GraphForm &gf);

enum class Algorithm { NfCz, NfCnot, NfAlt1, NfAlt2, Syndrome, GreedyDepth, Lnn };
std::string algorithm_name(Algorithm a);
Algorithm parse_algorithm(const std::string &name);

struct SynthOptions {
    size_t isd_iters = 100;
    uint64_t seed = 0;
    size_t restarts = 1;
};

/// Counts are recomputed from the circuit by make_report.
struct SynthReport {
    size_t two_qubit_count = 0;
    size_t two_qubit_depth = 0;
    std::string algorithm;
    uint64_t seed = 0;
    size_t restarts = 1;
};
SynthReport make_report(const Circuit &c, const std::string &algorithm, uint64_t seed, size_t restarts);

/// Direct dispatch; graph-state algorithms require k = 0.
Circuit synthesize(const IsometryTableau &t, Algorithm algo, const SynthOptions &opt = {});

}  // namespace cliffsyn

#endif
