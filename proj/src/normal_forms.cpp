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


#include "cliffsyn/error.hpp"
#include "cliffsyn/synth.hpp"

namespace cliffsyn {

namespace {

/// Entries of G between nodes off+i and off+j.
bool edge(const Reducer &r, size_t off, size_t i, size_t j) { return r.G().get(off + i, off + j); }

/// S on every loop, CZ on every edge of the chosen block.
void zero_block(Reducer &r, Side side, bool loops_first) {
    size_t off = side == Side::Input ? 0 : r.k();
    size_t m = side == Side::Input ? r.k() : r.n();
    auto loops = [&]() {
        for (size_t i = 0; i < m; i++) {
            if (edge(r, off, i, i)) r.emit(make_gate(GateKind::S, i, side));
        }
    };
    auto edges = [&]() {
        for (size_t i = 0; i < m; i++) {
            for (size_t j = i + 1; j < m; j++) {
                if (edge(r, off, i, j)) r.emit(make_gate(GateKind::CZ, i, j, side));
            }
        }
    };
    if (loops_first) {
        loops();
        edges();
    } else {
        edges();
        loops();
    }
}

/// Block ⊕ D′ = LDLᵀ: S for D′, CNOTs undoing L, S for what is left on the
/// diagonal.
void zero_block_cnot(Reducer &r, Side side) {
    bool in = side == Side::Input;
    size_t off = in ? 0 : r.k();
    size_t m = in ? r.k() : r.n();
    LdltResult f = ldlt_sym(r.G().block(off, off, m, m));
    for (size_t i = 0; i < m; i++) {
        if (f.Dp.get(i, i)) r.emit(make_gate(GateKind::S, i, side));
    }
    for (size_t j = 0; j < m; j++) {
        for (size_t i = j + 1; i < m; i++) {
            if (f.L.get(i, j)) r.emit(make_gate(GateKind::CNOT, i, j, side));
        }
    }
    for (size_t i = 0; i < m; i++) {
        if (edge(r, off, i, i)) r.emit(make_gate(GateKind::S, i, side));
    }
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            if (edge(r, off, i, j)) throw CliffError(ErrorCode::BadStructure, "LDLᵀ split left an edge");
        }
    }
}

bool bk(const Reducer &r, size_t i, size_t j) { return r.G().get(i, r.k() + j); }

/// Output CNOTs (column operations on B_k) bringing B_k to [I 0].
void reduce_bk_columns(Reducer &r) {
    for (size_t j = 0; j < r.k(); j++) {
        if (!bk(r, j, j)) {
            size_t p = j + 1;
            while (p < r.n() && !bk(r, j, p)) p++;
            if (p == r.n()) throw CliffError(ErrorCode::SingularMatrix, "B_k lost rank");
            r.emit_output(GateKind::CNOT, j, p);
        }
        for (size_t c = 0; c < r.n(); c++) {
            if (c != j && bk(r, j, c)) r.emit_output(GateKind::CNOT, c, j);
        }
    }
}

/// Input CNOTs (row operations on a square B_k): upper triangular when
/// `full` is false, the identity otherwise.
void reduce_bk_rows(Reducer &r, bool full) {
    size_t k = r.k();
    for (size_t j = 0; j < k; j++) {
        if (!bk(r, j, j)) {
            size_t p = j + 1;
            while (p < k && !bk(r, p, j)) p++;
            if (p == k) throw CliffError(ErrorCode::SingularMatrix, "B_k lost rank");
            r.emit_input(GateKind::CNOT, j, p);
        }
        for (size_t i = full ? 0 : j + 1; i < k; i++) {
            if (i != j && bk(r, i, j)) r.emit_input(GateKind::CNOT, i, j);
        }
    }
}

}  // namespace

Circuit synth_normal_cz(const GraphForm &gf) {
    Reducer r(gf);
    zero_block(r, Side::Input, true);
    zero_block(r, Side::Output, true);
    reduce_bk_columns(r);
    return r.finish();
}

Circuit synth_normal_cnot(const GraphForm &gf) {
    Reducer r(gf);
    zero_block_cnot(r, Side::Input);
    zero_block_cnot(r, Side::Output);
    reduce_bk_columns(r);
    return r.finish();
}

Circuit synth_normal_alt(const GraphForm &gf, AltForm form) {
    if (gf.k != gf.n) throw CliffError(ErrorCode::NotFullOperator, "alternative normal forms need k = n");
    Reducer r(gf);
    if (form == AltForm::CCzSHSCzC) {
        // C₁ on the input makes B_k upper triangular, C₂ on the output finishes.
        reduce_bk_rows(r, false);
        reduce_bk_columns(r);
        zero_block(r, Side::Input, false);
        zero_block(r, Side::Output, false);
    } else {
        reduce_bk_rows(r, true);
        zero_block(r, Side::Input, false);
        zero_block(r, Side::Output, true);
    }
    return r.finish();
}

}  // namespace cliffsyn
