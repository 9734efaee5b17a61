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

#ifndef CLIFFSYN_BIT_MATRIX_HPP
#define CLIFFSYN_BIT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cliffsyn {

/// Fixed-length vector over GF(2), packed into 64-bit words.
/// Bits past size() in the last word are always zero.
class BitVector {
   public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector unit(size_t n, size_t i);
    /// Parses a string of '0'/'1'; index 0 is the first character.
    static BitVector from_string(const std::string &s);

    size_t size() const { return n_; }
    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool b) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (b) {
            w_[i >> 6] |= m;
        } else {
            w_[i >> 6] &= ~m;
        }
    }
    void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }

    BitVector &operator^=(const BitVector &o);
    BitVector &operator&=(const BitVector &o);
    BitVector &operator|=(const BitVector &o);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector &b) { return a |= b; }
    BitVector operator~() const;
    bool operator==(const BitVector &o) const = default;

    size_t popcount() const;
    bool is_zero() const;
    /// Inner product over GF(2).
    bool dot(const BitVector &o) const;
    /// Lowest set index, or npos.
    size_t first_one() const;
    /// Highest set index, or npos.
    size_t last_one() const;
    void clear();

    std::vector<uint64_t> &words() { return w_; }
    const std::vector<uint64_t> &words() const { return w_; }
    std::string to_string() const;

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// Dense row-major matrix over GF(2).
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

    static BitMatrix identity(size_t n);
    /// Rows given as strings of '0'/'1'.
    static BitMatrix from_rows(const std::vector<std::string> &rows);
    /// Rows of width `cols`; an empty list gives a 0 × cols matrix.
    static BitMatrix from_rows(const std::vector<BitVector> &rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool get(size_t i, size_t j) const { return data_[i].get(j); }
    void set(size_t i, size_t j, bool b) { data_[i].set(j, b); }
    void flip(size_t i, size_t j) { data_[i].flip(j); }

    BitVector &row(size_t i) { return data_[i]; }
    const BitVector &row(size_t i) const { return data_[i]; }
    BitVector col(size_t j) const;
    void set_col(size_t j, const BitVector &v);

    void xor_row(size_t dst, size_t src) { data_[dst] ^= data_[src]; }
    void swap_rows(size_t a, size_t b) { std::swap(data_[a], data_[b]); }
    void xor_col(size_t dst, size_t src);
    void swap_cols(size_t a, size_t b);

    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix &o) const;
    /// M·v with v a column vector.
    BitVector mul(const BitVector &v) const;
    /// v·M with v a row vector.
    BitVector left_mul(const BitVector &v) const;
    BitMatrix &operator^=(const BitMatrix &o);
    friend BitMatrix operator^(BitMatrix a, const BitMatrix &b) { return a ^= b; }
    bool operator==(const BitMatrix &o) const = default;

    BitMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
    void set_block(size_t r0, size_t c0, const BitMatrix &m);

    bool is_symmetric() const;
    bool is_zero() const;
    size_t popcount() const;
    std::string to_string() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BitVector> data_;
};

size_t rank(const BitMatrix &m);
/// Throws SingularMatrix.
BitMatrix invert(const BitMatrix &m);
/// Some x with A·x = b, or nullopt.
std::optional<BitVector> solve(const BitMatrix &a, const BitVector &b);

struct LdltResult {
    BitMatrix L;
    BitMatrix D;
    BitMatrix Dp;
};
/// M = L·D·Lᵀ ⊕ D′ with L unit lower triangular, D and D′ diagonal.
LdltResult ldlt_sym(const BitMatrix &m);

struct SyndromeSolution {
    BitVector x;
    size_t weight = 0;
};
/// Low-weight x with x·H = s: greedy descent plus information-set restarts.
SyndromeSolution syndrome_decode(const BitMatrix &h, const BitVector &s, size_t isd_iters = 100,
                                 uint64_t seed = 0);

using Edge = std::pair<size_t, size_t>;
/// A maximum-cardinality (hence maximal) matching on the subgraph induced by
/// `allowed`; edges (i<j), sorted.
std::vector<Edge> maximal_matching(const BitMatrix &adjacency, const std::vector<size_t> &allowed);
/// Maximum matching between row nodes and column nodes, as (row, col) pairs.
std::vector<Edge> bipartite_matching(const BitMatrix &b, const std::vector<size_t> &allowed_rows,
                                     const std::vector<size_t> &allowed_cols);

}  // namespace cliffsyn

#endif
