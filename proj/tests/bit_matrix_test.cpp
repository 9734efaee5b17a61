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


#include "cliffsyn/bit_matrix.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cliffsyn/error.hpp"

using namespace cliffsyn;

namespace {

BitMatrix random_matrix(size_t r, size_t c, std::mt19937_64 &rng) {
    BitMatrix m(r, c);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) m.set(i, j, rng() & 1);
    }
    return m;
}

BitMatrix diag_of(const BitMatrix &m) {
    BitMatrix d(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); i++) d.set(i, i, m.get(i, i));
    return d;
}

}  // namespace

TEST(bit_matrix, rank_examples) {
    EXPECT_EQ(rank(BitMatrix(3, 3)), 0u);
    EXPECT_EQ(rank(BitMatrix::identity(4)), 4u);
    EXPECT_EQ(rank(BitMatrix::from_rows({"11", "11"})), 1u);
}

TEST(bit_matrix, invert_examples) {
    EXPECT_EQ(invert(BitMatrix::identity(5)), BitMatrix::identity(5));
    BitMatrix e = BitMatrix::from_rows({"11", "01"});
    EXPECT_EQ(invert(e), e);
    EXPECT_THROW(invert(BitMatrix::from_rows({"11", "11"})), CliffError);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; t++) {
        BitMatrix m = random_matrix(6, 6, rng);
        if (rank(m) < 6) continue;
        EXPECT_EQ(m * invert(m), BitMatrix::identity(6));
    }
}

TEST(bit_matrix, ldlt_examples) {
    LdltResult z = ldlt_sym(BitMatrix(3, 3));
    EXPECT_EQ(z.L, BitMatrix::identity(3));
    EXPECT_TRUE(z.D.is_zero() && z.Dp.is_zero());
    LdltResult i = ldlt_sym(BitMatrix::identity(3));
    EXPECT_EQ(i.L, BitMatrix::identity(3));
    EXPECT_EQ(i.D, BitMatrix::identity(3));
    EXPECT_TRUE(i.Dp.is_zero());
    LdltResult x = ldlt_sym(BitMatrix::from_rows({"01", "10"}));
    EXPECT_EQ(x.L, BitMatrix::from_rows({"10", "11"}));
    EXPECT_EQ(x.D, BitMatrix::identity(2));
    EXPECT_EQ(x.Dp, BitMatrix::from_rows({"10", "00"}));

    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + t % 9;
        BitMatrix a = random_matrix(n, n, rng);
        BitMatrix m = a ^ a.transpose() ^ diag_of(a);
        LdltResult r = ldlt_sym(m);
        EXPECT_EQ(r.L * r.D * r.L.transpose() ^ r.Dp, m);
        EXPECT_EQ(diag_of(r.D), r.D);
        EXPECT_EQ(diag_of(r.Dp), r.Dp);
    }
}

TEST(bit_matrix, syndrome_decode_examples) {
    BitMatrix h = BitMatrix::from_rows({"100", "010", "001", "110"});
    EXPECT_EQ(syndrome_decode(h, BitVector(3)).weight, 0u);
    SyndromeSolution one = syndrome_decode(h, BitVector::from_string("110"));
    EXPECT_EQ(one.weight, 1u);
    EXPECT_EQ(one.x, BitVector::from_string("0001"));
    SyndromeSolution two = syndrome_decode(h, BitVector::from_string("111"));
    EXPECT_EQ(two.weight, 2u);
    EXPECT_EQ(h.left_mul(two.x), BitVector::from_string("111"));
}

TEST(bit_matrix, syndrome_decode_is_valid_on_random_instances) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; t++) {
        size_t n = 2 + t % 8, m = n + t % 7;
        BitMatrix h = random_matrix(m, n, rng);
        for (size_t i = 0; i < n && i < m; i++) h.row(i) = BitVector::unit(n, i);
        BitVector s = random_matrix(1, n, rng).row(0);
        SyndromeSolution sol = syndrome_decode(h, s, 50, t);
        EXPECT_EQ(h.left_mul(sol.x), s);
        EXPECT_EQ(sol.x.popcount(), sol.weight);
        EXPECT_LE(sol.weight, s.popcount());
    }
}

TEST(bit_matrix, matching_examples) {
    std::vector<size_t> all4 = {0, 1, 2, 3};
    EXPECT_TRUE(maximal_matching(BitMatrix(4, 4), all4).empty());
    BitMatrix edge(2, 2);
    edge.set(0, 1, true);
    edge.set(1, 0, true);
    EXPECT_EQ(maximal_matching(edge, {0, 1}), (std::vector<Edge>{{0, 1}}));
    BitMatrix path = BitMatrix::from_rows({"0100", "1010", "0101", "0010"});
    EXPECT_EQ(maximal_matching(path, all4), (std::vector<Edge>{{0, 1}, {2, 3}}));
    EXPECT_TRUE(maximal_matching(path, {0, 2}).empty());

    EXPECT_TRUE(bipartite_matching(BitMatrix(2, 2), {0, 1}, {0, 1}).empty());
    EXPECT_EQ(bipartite_matching(BitMatrix::identity(3), {0, 1, 2}, {0, 1, 2}),
              (std::vector<Edge>{{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_EQ(bipartite_matching(BitMatrix::from_rows({"11", "10"}), {0, 1}, {0, 1}),
              (std::vector<Edge>{{0, 1}, {1, 0}}));
}
