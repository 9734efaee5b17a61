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

#include <gtest/gtest.h>

#include "cliffsyn/error.hpp"
#include "cliffsyn/io.hpp"
#include "cliffsyn/simcheck.hpp"

using namespace cliffsyn;

namespace {

/// U·P = Q·U on every basis state, U the dense unitary of c.
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

PauliTableau words(const std::vector<std::string> &ws) {
    std::vector<PauliOp> ps;
    for (const auto &w : ws) ps.push_back(parse_pauli(w));
    return PauliTableau::from_paulis(ps);
}

}  // namespace

TEST(codiag, single_x_needs_one_h) {
    for (auto v : {CodiagVariant::Syndrome, CodiagVariant::Matching}) {
        CodiagResult r = codiagonalize(words({"X"}), v);
        ASSERT_EQ(r.circuit.gates.size(), 1u);
        EXPECT_EQ(r.circuit.gates[0].kind, GateKind::H);
        EXPECT_EQ(r.z_words[0].to_string(), "+Z");
    }
}

TEST(codiag, z_words_need_nothing) {
    CodiagResult r = codiagonalize(words({"ZZI", "-IZZ"}), CodiagVariant::Syndrome);
    EXPECT_TRUE(r.circuit.gates.empty());
    EXPECT_EQ(r.z_words[1].to_string(), "-IZZ");
}

TEST(codiag, rejects_bad_sets) {
    auto code = [](const PauliTableau &pt) {
        try {
            codiagonalize(pt, CodiagVariant::Syndrome);
        } catch (const CliffError &e) {
            return e.code();
        }
        return ErrorCode::BadConfig;
    };
    EXPECT_EQ(code(words({"XI", "ZI"})), ErrorCode::NonCommuting);
    EXPECT_EQ(code(words({"XX", "ZZ", "-YY"})), ErrorCode::TooManyPaulis);
    EXPECT_EQ(code(words({"XX", "XX"})), ErrorCode::DependentColumns);
}

TEST(codiag, completion_is_isotropic_and_full_rank) {
    PauliTableau c = complete_to_full(words({"ZII"}));
    ASSERT_EQ(c.k, 3u);
    EXPECT_EQ(c.column(0).to_string(), "+ZII");
    for (uint64_t seed = 0; seed < 20; seed++) {
        size_t n = 2 + seed % 7;
        PauliTableau pt = PauliTableau::from_paulis(random_commuting_set(n, n - 1 - (seed % 2) * (n > 2), seed));
        PauliTableau full = complete_to_full(pt);
        EXPECT_NO_THROW(validate_commuting_set(full));
        EXPECT_EQ(full.k, n);
        for (size_t j = 0; j < pt.k; j++) EXPECT_EQ(full.column(j), pt.column(j));
    }
}

TEST(codiag, lower_x_examples) {
    // X_k = I and the lower row equals e_1: one CNOT from wire 1.
    BitMatrix x = BitMatrix::from_rows({"10", "01", "01"});
    BitMatrix z = BitMatrix::from_rows({"00", "00", "11"});
    auto ops = zero_lower_x_syndrome(z, x);
    ASSERT_EQ(ops.size(), 1u);
    EXPECT_EQ(ops[0], make_gate(GateKind::CNOT, 1, 2));
    EXPECT_TRUE(zero_lower_x_syndrome(z, BitMatrix::from_rows({"10", "01", "00"})).empty());
    // B = I: one layer of disjoint shifts.
    auto m = zero_lower_x_matching(BitMatrix::from_rows({"100", "010", "001", "100", "010", "001"}));
    EXPECT_EQ(m.size(), 3u);
    EXPECT_EQ(compute_metrics(m, 6).two_qubit_depth, 1u);
    EXPECT_THROW(zero_lower_x_matching(BitMatrix::from_rows({"11", "11", "00"})), CliffError);
}

TEST(codiag, random_sets_map_to_z_words) {
    for (uint64_t seed = 0; seed < 60; seed++) {
        size_t n = 1 + seed % 9, k = 1 + (seed / 9) % n;
        auto ps = random_commuting_set(n, k, seed);
        PauliTableau pt = PauliTableau::from_paulis(ps);
        for (auto v : {CodiagVariant::Syndrome, CodiagVariant::Matching}) {
            CodiagResult r = codiagonalize(pt, v, 3, 30, seed);
            ASSERT_EQ(r.z_words.size(), k);
            for (size_t j = 0; j < k; j++) {
                EXPECT_TRUE(r.z_words[j].x.is_zero());
                EXPECT_EQ(conjugate_pauli(ps[j], r.circuit.gates), r.z_words[j]);
                if (n <= 5) EXPECT_TRUE(dense_maps(r.circuit, ps[j], r.z_words[j])) << seed;
            }
            EXPECT_EQ(r.report.two_qubit_count, r.circuit.metrics().two_qubit_count);
        }
    }
}

TEST(codiag, stabilizers_of_a_random_clifford) {
    IsometryTableau t = random_clifford(8, 0, 5);
    std::vector<PauliOp> ps;
    for (size_t j = 0; j < 8; j++) ps.push_back(t.column(j));
    CodiagResult r = codiagonalize(PauliTableau::from_paulis(ps), CodiagVariant::Syndrome);
    for (size_t j = 0; j < 8; j++) EXPECT_EQ(conjugate_pauli(ps[j], r.circuit.gates), r.z_words[j]);
}

namespace {

/// Binary parts of a random commuting set with X_k invertible, scaled to X_k = I.
std::pair<BitMatrix, BitMatrix> normalized_instance(size_t n, size_t k, uint64_t seed) {
    while (true) {
        auto ps = random_commuting_set(n, k, seed++);
        PauliTableau pt = PauliTableau::from_paulis(ps);
        BitMatrix xk = pt.X.block(0, 0, k, k);
        if (rank(xk) != k) continue;
        BitMatrix inv = invert(xk);
        return {pt.Z * inv, pt.X * inv};
    }
}

}  // namespace

TEST(codiag, syndrome_beats_plain_elimination) {
    for (uint64_t seed = 0; seed < 30; seed++) {
        auto [z, x] = normalized_instance(10, 6, seed * 1000);
        size_t plain = 0;
        for (size_t q = 6; q < 10; q++) plain += x.row(q).popcount();
        auto ops = zero_lower_x_syndrome(z, x, 100, seed);
        EXPECT_LE(compute_metrics(ops, 10).two_qubit_count, plain) << seed;
    }
}

TEST(codiag, matching_is_usually_shallower) {
    size_t wins = 0;
    for (uint64_t seed = 0; seed < 50; seed++) {
        auto [z, x] = normalized_instance(12, 8, seed * 1000);
        size_t dm = compute_metrics(zero_lower_x_matching(x), 12).two_qubit_depth;
        size_t ds = compute_metrics(zero_lower_x_syndrome(z, x, 100, seed), 12).two_qubit_depth;
        if (dm <= ds) wins++;
    }
    EXPECT_GT(wins, 25u);
}
