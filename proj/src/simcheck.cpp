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

#include "cliffsyn/simcheck.hpp"

#include <bit>
#include <cmath>

#include "cliffsyn/error.hpp"

namespace cliffsyn {

namespace {

const Complex kI(0, 1);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Complex ipow(long e) {
    static const Complex p[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return p[((e % 4) + 4) % 4];
}

size_t num_qubits(const StateVector &psi) { return static_cast<size_t>(std::countr_zero(psi.size())); }

double norm2(const StateVector &v) {
    double s = 0;
    for (const auto &c : v) s += std::norm(c);
    return s;
}

uint64_t mask_of(const BitVector &v) {
    uint64_t m = 0;
    for (size_t q = 0; q < v.size(); q++) {
        if (v.get(q)) m |= uint64_t{1} << q;
    }
    return m;
}

}  // namespace

StateVector DenseIsometry::column(size_t x) const {
    StateVector v(size_t{1} << n);
    for (size_t y = 0; y < v.size(); y++) v[y] = at(y, x);
    return v;
}

void apply_gate_dense(StateVector &psi, const Gate &g) {
    size_t n = num_qubits(psi);
    if (g.q0 >= n || (g.two_qubit() && g.q1 >= n)) throw CliffError(ErrorCode::BadGate, g.to_string());
    uint64_t a = uint64_t{1} << g.q0, b = uint64_t{1} << g.q1;
    size_t dim = psi.size();
    switch (g.kind) {
        case GateKind::H:
            for (size_t i = 0; i < dim; i++) {
                if (i & a) continue;
                Complex u = psi[i], v = psi[i | a];
                psi[i] = (u + v) * kInvSqrt2;
                psi[i | a] = (u - v) * kInvSqrt2;
            }
            break;
        case GateKind::S:
        case GateKind::Sdg: {
            Complex ph = g.kind == GateKind::S ? kI : -kI;
            for (size_t i = 0; i < dim; i++) {
                if (i & a) psi[i] *= ph;
            }
            break;
        }
        case GateKind::Z:
            for (size_t i = 0; i < dim; i++) {
                if (i & a) psi[i] = -psi[i];
            }
            break;
        case GateKind::X:
            for (size_t i = 0; i < dim; i++) {
                if (!(i & a)) std::swap(psi[i], psi[i | a]);
            }
            break;
        case GateKind::Y:
            for (size_t i = 0; i < dim; i++) {
                if (i & a) continue;
                Complex u = psi[i], v = psi[i | a];
                psi[i] = -kI * v;
                psi[i | a] = kI * u;
            }
            break;
        case GateKind::RxHalfPi:
            for (size_t i = 0; i < dim; i++) {
                if (i & a) continue;
                Complex u = psi[i], v = psi[i | a];
                psi[i] = (u - kI * v) * kInvSqrt2;
                psi[i | a] = (v - kI * u) * kInvSqrt2;
            }
            break;
        case GateKind::CZ:
            for (size_t i = 0; i < dim; i++) {
                if ((i & a) && (i & b)) psi[i] = -psi[i];
            }
            break;
        case GateKind::CNOT:
            for (size_t i = 0; i < dim; i++) {
                if ((i & a) && !(i & b)) std::swap(psi[i], psi[i | b]);
            }
            break;
        case GateKind::SWAP:
            for (size_t i = 0; i < dim; i++) {
                if ((i & a) && !(i & b)) std::swap(psi[i], psi[(i & ~a) | b]);
            }
            break;
    }
}

void apply_pauli_dense(StateVector &psi, const PauliOp &p) {
    if (psi.size() != (size_t{1} << p.n)) throw CliffError(ErrorCode::DimMismatch, "pauli vs state size");
    uint64_t zm = mask_of(p.z), xm = mask_of(p.x);
    // Each letter is i^{zx} X^x Z^z.
    Complex pre = ipow(p.phase_exp + static_cast<long>(std::popcount(zm & xm)));
    StateVector out(psi.size());
    for (size_t b = 0; b < psi.size(); b++) {
        Complex c = (std::popcount(b & zm) & 1) ? -psi[b] : psi[b];
        out[b ^ xm] = pre * c;
    }
    psi.swap(out);
}

DenseIsometry dense_isometry(const Circuit &c) {
    if (c.n > kDenseLimit) throw CliffError(ErrorCode::TooLarge, "dense simulation limited to 12 qubits");
    DenseIsometry v{c.n, c.k, std::vector<Complex>(size_t{1} << (c.n + c.k))};
    for (size_t x = 0; x < (size_t{1} << c.k); x++) {
        StateVector psi(size_t{1} << c.n);
        psi[x] = 1;
        for (const auto &g : c.gates) apply_gate_dense(psi, g);
        for (size_t y = 0; y < psi.size(); y++) v.at(y, x) = psi[y];
    }
    return v;
}

DenseIsometry dense_from_tableau(const IsometryTableau &t) {
    size_t n = t.n(), k = t.k();
    if (n > kDenseLimit) throw CliffError(ErrorCode::TooLarge, "dense simulation limited to 12 qubits");
    size_t dim = size_t{1} << n;
    // V|0⟩ is the joint +1 eigenvector of the first n column images.
    StateVector base;
    for (size_t b = 0; b < dim && base.empty(); b++) {
        StateVector psi(dim);
        psi[b] = 1;
        for (size_t j = 0; j < n; j++) {
            StateVector q = psi;
            apply_pauli_dense(q, t.column(j));
            for (size_t i = 0; i < dim; i++) psi[i] = (psi[i] + q[i]) * 0.5;
        }
        double nn = norm2(psi);
        if (nn > 1e-9) {
            for (auto &c : psi) c /= std::sqrt(nn);
            base = psi;
        }
    }
    if (base.empty()) throw CliffError(ErrorCode::BadStructure, "tableau has no stabilized state");
    DenseIsometry v{n, k, std::vector<Complex>(size_t{1} << (n + k))};
    for (size_t x = 0; x < (size_t{1} << k); x++) {
        StateVector psi = base;
        for (size_t j = 0; j < k; j++) {
            if ((x >> j) & 1) apply_pauli_dense(psi, t.column(n + j));
        }
        for (size_t y = 0; y < dim; y++) v.at(y, x) = psi[y];
    }
    return v;
}

bool equal_up_to_global_phase(const DenseIsometry &a, const DenseIsometry &b, double tol) {
    if (a.n != b.n || a.k != b.k) throw CliffError(ErrorCode::DimMismatch, "isometry shapes differ");
    size_t best = 0;
    for (size_t i = 0; i < a.entries.size(); i++) {
        if (std::abs(a.entries[i]) > std::abs(a.entries[best])) best = i;
    }
    if (std::abs(b.entries[best]) < 1e-12) return false;
    Complex phase = a.entries[best] / b.entries[best];
    if (std::abs(std::abs(phase) - 1) > tol) return false;
    for (size_t i = 0; i < a.entries.size(); i++) {
        if (std::abs(a.entries[i] - phase * b.entries[i]) > tol) return false;
    }
    return true;
}

bool is_isometry(const DenseIsometry &v, double tol) {
    size_t cols = size_t{1} << v.k, rows = size_t{1} << v.n;
    for (size_t a = 0; a < cols; a++) {
        for (size_t b = 0; b < cols; b++) {
            Complex s = 0;
            for (size_t y = 0; y < rows; y++) s += std::conj(v.at(y, a)) * v.at(y, b);
            if (std::abs(s - Complex(a == b ? 1.0 : 0.0)) > tol) return false;
        }
    }
    return true;
}

bool conjugation_matches(const Gate &g, size_t n, const PauliOp &p, const PauliOp &q, double tol) {
    size_t dim = size_t{1} << n;
    for (size_t b = 0; b < dim; b++) {
        StateVector lhs(dim), rhs(dim);
        lhs[b] = 1;
        rhs[b] = 1;
        apply_pauli_dense(lhs, p);
        apply_gate_dense(lhs, g);
        apply_gate_dense(rhs, g);
        apply_pauli_dense(rhs, q);
        for (size_t i = 0; i < dim; i++) {
            if (std::abs(lhs[i] - rhs[i]) > tol) return false;
        }
    }
    return true;
}

}  // namespace cliffsyn
