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


#include "cliffsyn/io.hpp"

#include <random>
#include <regex>
#include <sstream>

#include "cliffsyn/error.hpp"

namespace cliffsyn {

namespace {

const char *qasm_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::CZ: return "cz";
        case GateKind::CNOT: return "cx";
        case GateKind::RxHalfPi: return "rx(pi/2)";
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::SWAP: return "swap";
    }
    return "?";
}

bool kind_from_name(const std::string &s, GateKind &out, bool qasm) {
    static const GateKind all[] = {GateKind::H,  GateKind::S, GateKind::Sdg, GateKind::CZ, GateKind::CNOT,
                                   GateKind::RxHalfPi, GateKind::X, GateKind::Y, GateKind::Z, GateKind::SWAP};
    for (GateKind g : all) {
        if (s == (qasm ? qasm_name(g) : gate_name(g))) {
            out = g;
            return true;
        }
    }
    return false;
}

}  // namespace

std::string emit_qasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.n << "];\n";
    for (const auto &g : c.gates) {
        out << qasm_name(g.kind) << " q[" << g.q0 << "]";
        if (g.two_qubit()) out << ",q[" << g.q1 << "]";
        out << ";\n";
    }
    return out.str();
}

Circuit parse_qasm(const std::string &text, size_t k) {
    Circuit c;
    c.k = k;
    bool have_reg = false;
    static const std::regex qreg_re(R"(qreg\s+q\[(\d+)\];)");
    static const std::regex gate_re(R"(([a-z]+(?:\(pi/2\))?)\s+q\[(\d+)\](?:\s*,\s*q\[(\d+)\])?;)");
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = std::regex_replace(line, std::regex(R"(^\s+|\s+$|//.*)"), "");
        if (line.empty() || line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0) continue;
        std::smatch m;
        if (std::regex_match(line, m, qreg_re)) {
            c.n = std::stoul(m[1]);
            have_reg = true;
            continue;
        }
        GateKind kind;
        if (!std::regex_match(line, m, gate_re) || !kind_from_name(m[1], kind, true)) {
            throw CliffError(ErrorCode::ParseError, "unsupported QASM line: " + line);
        }
        Gate g{kind, std::stoul(m[2]), std::stoul(m[2]), Side::Output};
        if (g.two_qubit() != m[3].matched) throw CliffError(ErrorCode::ParseError, "wrong arity: " + line);
        if (m[3].matched) g.q1 = std::stoul(m[3]);
        if (!have_reg || g.q0 >= c.n || g.q1 >= c.n) throw CliffError(ErrorCode::ParseError, "qubit out of range");
        c.add(g);
    }
    if (!have_reg) throw CliffError(ErrorCode::ParseError, "missing qreg");
    if (k > c.n) throw CliffError(ErrorCode::BadDims, "k exceeds register size");
    return c;
}

std::string emit_native(const Circuit &c) {
    std::ostringstream out;
    out << c.n << " " << c.k << "\n";
    for (const auto &g : c.gates) out << g.to_string() << "\n";
    return out.str();
}

Circuit parse_native(const std::string &text) {
    std::istringstream in(text);
    Circuit c;
    long n = -1, k = -1;
    if (!(in >> n >> k) || n < 0 || k < 0 || k > n) throw CliffError(ErrorCode::ParseError, "bad circuit header");
    c.n = static_cast<size_t>(n);
    c.k = static_cast<size_t>(k);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string name, tag;
        if (!(ls >> name)) continue;
        GateKind kind;
        if (!kind_from_name(name, kind, false)) throw CliffError(ErrorCode::ParseError, "unknown gate: " + name);
        Gate g{kind, 0, 0, Side::Output};
        if (!(ls >> g.q0)) throw CliffError(ErrorCode::ParseError, "missing qubit: " + line);
        g.q1 = g.q0;
        if (g.two_qubit() && !(ls >> g.q1)) throw CliffError(ErrorCode::ParseError, "missing qubit: " + line);
        if (ls >> tag) {
            if (tag != "in") throw CliffError(ErrorCode::ParseError, "trailing token: " + tag);
            g.side = Side::Input;
        }
        if (g.q0 >= c.n || g.q1 >= c.n) throw CliffError(ErrorCode::ParseError, "qubit out of range");
        c.add(g);
    }
    return c;
}

Circuit random_clifford_circuit(size_t n, size_t k, uint64_t seed) {
    if (k > n) throw CliffError(ErrorCode::BadDims, "k must not exceed n");
    Circuit c;
    c.n = n;
    c.k = k;
    if (n == 0) return c;
    std::mt19937_64 rng(seed);
    static const GateKind singles[] = {GateKind::H, GateKind::S, GateKind::X, GateKind::Z};
    size_t steps = 10 * n * n + 10;
    for (size_t s = 0; s < steps; s++) {
        size_t a = rng() % n;
        if (n > 1 && rng() % 2) {
            size_t b = rng() % (n - 1);
            if (b >= a) b++;
            c.add(make_gate(rng() % 3 ? GateKind::CNOT : GateKind::CZ, a, b));
        } else {
            c.add(make_gate(singles[rng() % 4], a));
        }
    }
    return c;
}

IsometryTableau random_clifford(size_t n, size_t k, uint64_t seed) {
    return replay_tableau(random_clifford_circuit(n, k, seed));
}

std::vector<PauliOp> random_commuting_set(size_t n, size_t k, uint64_t seed) {
    if (k > n) throw CliffError(ErrorCode::TooManyPaulis, "at most n commuting independent operators");
    IsometryTableau t = random_clifford(n, 0, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<PauliOp> out;
    for (size_t j = 0; j < k; j++) {
        PauliOp p = t.column(j);
        // Only later stabilizers, so the set stays independent.
        for (size_t i = j + 1; i < n; i++) {
            if (rng() & 1) p = pauli_product(p, t.column(i));
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace cliffsyn
