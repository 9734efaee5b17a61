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

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "cliffsyn/error.hpp"

namespace cliffsyn {

const char *error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SingularMatrix: return "SingularMatrix";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::Unsolvable: return "Unsolvable";
        case ErrorCode::BadPauliChar: return "BadPauliChar";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::BadDims: return "BadDims";
        case ErrorCode::BadQubit: return "BadQubit";
        case ErrorCode::BadColumn: return "BadColumn";
        case ErrorCode::RangeViolation: return "RangeViolation";
        case ErrorCode::DiagonalMismatch: return "DiagonalMismatch";
        case ErrorCode::BadLength: return "BadLength";
        case ErrorCode::NotFullOperator: return "NotFullOperator";
        case ErrorCode::NotReduced: return "NotReduced";
        case ErrorCode::BadStructure: return "BadStructure";
        case ErrorCode::NonCommuting: return "NonCommuting";
        case ErrorCode::DependentColumns: return "DependentColumns";
        case ErrorCode::TooManyPaulis: return "TooManyPaulis";
        case ErrorCode::SingularXk: return "SingularXk";
        case ErrorCode::BadGate: return "BadGate";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::BadConfig: return "BadConfig";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- BitVector

BitVector BitVector::unit(size_t n, size_t i) {
    BitVector v(n);
    v.set(i, true);
    return v;
}

BitVector BitVector::from_string(const std::string &s) {
    BitVector v(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '1') {
            v.set(i, true);
        } else if (s[i] != '0') {
            throw CliffError(ErrorCode::ParseError, "bit string contains '" + std::string(1, s[i]) + "'");
        }
    }
    return v;
}

BitVector &BitVector::operator^=(const BitVector &o) {
    for (size_t i = 0; i < w_.size(); i++) w_[i] ^= o.w_[i];
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &o) {
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &o) {
    for (size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
    return *this;
}

BitVector BitVector::operator~() const {
    BitVector r = *this;
    for (auto &w : r.w_) w = ~w;
    if (n_ & 63) r.w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
    return r;
}

size_t BitVector::popcount() const {
    size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool BitVector::is_zero() const {
    return std::all_of(w_.begin(), w_.end(), [](uint64_t w) { return w == 0; });
}

bool BitVector::dot(const BitVector &o) const {
    uint64_t acc = 0;
    for (size_t i = 0; i < w_.size(); i++) acc ^= w_[i] & o.w_[i];
    return std::popcount(acc) & 1;
}

size_t BitVector::first_one() const {
    for (size_t i = 0; i < w_.size(); i++) {
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    }
    return npos;
}

size_t BitVector::last_one() const {
    for (size_t i = w_.size(); i-- > 0;) {
        if (w_[i]) return i * 64 + 63 - std::countl_zero(w_[i]);
    }
    return npos;
}

void BitVector::clear() { std::fill(w_.begin(), w_.end(), 0); }

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), c);
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != c) throw CliffError(ErrorCode::BadDims, "ragged rows");
        m.data_[i] = BitVector::from_string(rows[i]);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector> &rows, size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != cols) throw CliffError(ErrorCode::SizeMismatch, "row width differs");
        m.data_[i] = rows[i];
    }
    return m;
}

BitVector BitMatrix::col(size_t j) const {
    BitVector v(rows_);
    for (size_t i = 0; i < rows_; i++) {
        if (get(i, j)) v.set(i, true);
    }
    return v;
}

void BitMatrix::set_col(size_t j, const BitVector &v) {
    for (size_t i = 0; i < rows_; i++) set(i, j, v.get(i));
}

void BitMatrix::xor_col(size_t dst, size_t src) {
    for (size_t i = 0; i < rows_; i++) {
        if (get(i, src)) flip(i, dst);
    }
}

void BitMatrix::swap_cols(size_t a, size_t b) {
    for (size_t i = 0; i < rows_; i++) {
        bool x = get(i, a);
        set(i, a, get(i, b));
        set(i, b, x);
    }
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            if (get(i, j)) t.set(j, i, true);
        }
    }
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix &o) const {
    if (cols_ != o.rows_) throw CliffError(ErrorCode::DimMismatch, "matrix product");
    BitMatrix r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t t = 0; t < cols_; t++) {
            if (get(i, t)) r.data_[i] ^= o.data_[t];
        }
    }
    return r;
}

BitVector BitMatrix::mul(const BitVector &v) const {
    if (v.size() != cols_) throw CliffError(ErrorCode::DimMismatch, "matrix-vector product");
    BitVector r(rows_);
    for (size_t i = 0; i < rows_; i++) r.set(i, data_[i].dot(v));
    return r;
}

BitVector BitMatrix::left_mul(const BitVector &v) const {
    if (v.size() != rows_) throw CliffError(ErrorCode::DimMismatch, "vector-matrix product");
    BitVector r(cols_);
    for (size_t i = 0; i < rows_; i++) {
        if (v.get(i)) r ^= data_[i];
    }
    return r;
}

BitMatrix &BitMatrix::operator^=(const BitMatrix &o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw CliffError(ErrorCode::DimMismatch, "matrix sum");
    for (size_t i = 0; i < rows_; i++) data_[i] ^= o.data_[i];
    return *this;
}

BitMatrix BitMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    BitMatrix b(nr, nc);
    for (size_t i = 0; i < nr; i++) {
        for (size_t j = 0; j < nc; j++) {
            if (get(r0 + i, c0 + j)) b.set(i, j, true);
        }
    }
    return b;
}

void BitMatrix::set_block(size_t r0, size_t c0, const BitMatrix &m) {
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) set(r0 + i, c0 + j, m.get(i, j));
    }
}

bool BitMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = i + 1; j < cols_; j++) {
            if (get(i, j) != get(j, i)) return false;
        }
    }
    return true;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BitVector &r) { return r.is_zero(); });
}

size_t BitMatrix::popcount() const {
    size_t c = 0;
    for (const auto &r : data_) c += r.popcount();
    return c;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto &r : data_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

// ---------------------------------------------------------------- algorithms

size_t rank(const BitMatrix &m) {
    BitMatrix a = m;
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < a.rows(); c++) {
        size_t p = r;
        while (p < a.rows() && !a.get(p, c)) p++;
        if (p == a.rows()) continue;
        a.swap_rows(r, p);
        for (size_t i = r + 1; i < a.rows(); i++) {
            if (a.get(i, c)) a.xor_row(i, r);
        }
        r++;
    }
    return r;
}

BitMatrix invert(const BitMatrix &m) {
    if (m.rows() != m.cols()) throw CliffError(ErrorCode::DimMismatch, "invert needs a square matrix");
    size_t n = m.rows();
    BitMatrix a = m;
    BitMatrix inv = BitMatrix::identity(n);
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && !a.get(p, c)) p++;
        if (p == n) throw CliffError(ErrorCode::SingularMatrix, "matrix is not invertible");
        a.swap_rows(c, p);
        inv.swap_rows(c, p);
        for (size_t i = 0; i < n; i++) {
            if (i != c && a.get(i, c)) {
                a.xor_row(i, c);
                inv.xor_row(i, c);
            }
        }
    }
    return inv;
}

std::optional<BitVector> solve(const BitMatrix &a, const BitVector &b) {
    if (b.size() != a.rows()) throw CliffError(ErrorCode::DimMismatch, "solve");
    size_t m = a.rows(), n = a.cols();
    // Augmented [A | b].
    BitMatrix aug(m, n + 1);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < n; j++) aug.set(i, j, a.get(i, j));
        aug.set(i, n, b.get(i));
    }
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; c++) {
        size_t p = r;
        while (p < m && !aug.get(p, c)) p++;
        if (p == m) continue;
        aug.swap_rows(r, p);
        for (size_t i = 0; i < m; i++) {
            if (i != r && aug.get(i, c)) aug.xor_row(i, r);
        }
        pivots.push_back(c);
        r++;
    }
    for (size_t i = r; i < m; i++) {
        if (aug.get(i, n)) return std::nullopt;
    }
    BitVector x(n);
    for (size_t i = 0; i < pivots.size(); i++) x.set(pivots[i], aug.get(i, n));
    return x;
}

LdltResult ldlt_sym(const BitMatrix &m) {
    if (!m.is_symmetric()) throw CliffError(ErrorCode::NotSymmetric, "ldlt_sym needs a symmetric matrix");
    size_t n = m.rows();
    BitMatrix w = m;
    LdltResult res{BitMatrix::identity(n), BitMatrix(n, n), BitMatrix(n, n)};
    for (size_t j = 0; j < n; j++) {
        BitVector l = w.col(j);
        l.set(j, false);
        if (l.is_zero()) {
            res.D.set(j, j, w.get(j, j));
            w.set(j, j, false);
            continue;
        }
        // Pivot on the off-diagonal column; the diagonal residue goes to D′.
        l.set(j, true);
        res.D.set(j, j, true);
        res.Dp.set(j, j, !w.get(j, j));
        for (size_t i = 0; i < n; i++) {
            if (l.get(i)) w.row(i) ^= l;
        }
        w.set(j, j, false);
        for (size_t i = j + 1; i < n; i++) res.L.set(i, j, l.get(i));
    }
    return res;
}

namespace {

std::optional<BitVector> greedy_syndrome(const BitMatrix &h, const BitVector &s) {
    BitVector x(h.rows());
    BitVector cur = s;
    while (!cur.is_zero()) {
        size_t best = BitVector::npos;
        size_t best_w = cur.popcount();
        for (size_t i = 0; i < h.rows(); i++) {
            size_t w = (h.row(i) ^ cur).popcount();
            if (w < best_w) {
                best_w = w;
                best = i;
            }
        }
        if (best == BitVector::npos) return std::nullopt;
        cur ^= h.row(best);
        x.flip(best);
    }
    return x;
}

}  // namespace

SyndromeSolution syndrome_decode(const BitMatrix &h, const BitVector &s, size_t isd_iters, uint64_t seed) {
    if (s.size() != h.cols()) throw CliffError(ErrorCode::DimMismatch, "syndrome length");
    auto plain = solve(h.transpose(), s);
    if (!plain) throw CliffError(ErrorCode::Unsolvable, "syndrome is outside the row span");
    SyndromeSolution best{*plain, plain->popcount()};
    auto consider = [&](const BitVector &x) {
        size_t w = x.popcount();
        if (w < best.weight) best = {x, w};
    };
    if (auto g = greedy_syndrome(h, s)) consider(*g);

    size_t n = h.cols();
    if (n == 0 || rank(h) < n) return best;
    // Information sets: n independent rows M give P = M⁻¹, so HP carries the
    // canonical vectors and the descent always terminates.
    std::mt19937_64 rng(seed);
    std::vector<size_t> order(h.rows());
    std::iota(order.begin(), order.end(), 0);
    for (size_t it = 0; it < isd_iters; it++) {
        std::shuffle(order.begin(), order.end(), rng);
        BitMatrix basis(n, n);
        std::vector<BitVector> reduced;
        std::vector<size_t> pivot_cols;
        size_t found = 0;
        for (size_t idx : order) {
            if (found == n) break;
            BitVector v = h.row(idx);
            for (size_t t = 0; t < reduced.size(); t++) {
                if (v.get(pivot_cols[t])) v ^= reduced[t];
            }
            size_t p = v.first_one();
            if (p == BitVector::npos) continue;
            reduced.push_back(v);
            pivot_cols.push_back(p);
            basis.row(found++) = h.row(idx);
        }
        BitMatrix p = invert(basis);
        auto g = greedy_syndrome(h * p, p.left_mul(s));
        if (g) consider(*g);
    }
    return best;
}

namespace {

using MatchGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

std::vector<size_t> max_cardinality_mates(const MatchGraph &g) {
    std::vector<MatchGraph::vertex_descriptor> mate(boost::num_vertices(g));
    boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
    std::vector<size_t> out(mate.size(), BitVector::npos);
    for (size_t v = 0; v < mate.size(); v++) {
        if (mate[v] != boost::graph_traits<MatchGraph>::null_vertex()) out[v] = mate[v];
    }
    return out;
}

}  // namespace

std::vector<Edge> maximal_matching(const BitMatrix &adjacency, const std::vector<size_t> &allowed) {
    MatchGraph g(allowed.size());
    for (size_t a = 0; a < allowed.size(); a++) {
        for (size_t b = a + 1; b < allowed.size(); b++) {
            if (adjacency.get(allowed[a], allowed[b])) boost::add_edge(a, b, g);
        }
    }
    std::vector<size_t> mate = max_cardinality_mates(g);
    std::vector<Edge> out;
    for (size_t a = 0; a < allowed.size(); a++) {
        if (mate[a] != BitVector::npos && mate[a] > a) {
            out.emplace_back(std::min(allowed[a], allowed[mate[a]]), std::max(allowed[a], allowed[mate[a]]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> bipartite_matching(const BitMatrix &b, const std::vector<size_t> &allowed_rows,
                                     const std::vector<size_t> &allowed_cols) {
    size_t nr = allowed_rows.size();
    MatchGraph g(nr + allowed_cols.size());
    for (size_t a = 0; a < nr; a++) {
        for (size_t c = 0; c < allowed_cols.size(); c++) {
            if (b.get(allowed_rows[a], allowed_cols[c])) boost::add_edge(a, nr + c, g);
        }
    }
    std::vector<size_t> mate = max_cardinality_mates(g);
    std::vector<Edge> out;
    for (size_t a = 0; a < nr; a++) {
        if (mate[a] != BitVector::npos) out.emplace_back(allowed_rows[a], allowed_cols[mate[a] - nr]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cliffsyn
