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

#include "cliffsyn/pauli.hpp"

#include <sstream>

#include "cliffsyn/error.hpp"

namespace cliffsyn {

char PauliOp::letter(size_t q) const {
    static const char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(z.get(q) ? 2 : 0) | (x.get(q) ? 1 : 0)];
}

std::string PauliOp::to_string() const {
    static const char *signs[4] = {"+", "+i", "-", "-i"};
    std::string s = signs[phase_exp & 3];
    for (size_t q = 0; q < n; q++) s += letter(q);
    return s;
}

PauliOp parse_pauli(const std::string &word, size_t n) {
    size_t pos = 0;
    int phase = 0;
    if (pos < word.size() && (word[pos] == '+' || word[pos] == '-')) {
        if (word[pos] == '-') phase = 2;
        pos++;
    }
    if (pos < word.size() && word[pos] == 'i') {
        phase += 1;
        pos++;
    }
    std::string letters = word.substr(pos);
    if (n == BitVector::npos) n = letters.size();
    if (letters.size() != n) {
        throw CliffError(ErrorCode::LengthMismatch,
                         "word '" + word + "' has " + std::to_string(letters.size()) + " letters, expected " +
                             std::to_string(n));
    }
    PauliOp p(n);
    p.phase_exp = phase & 3;
    for (size_t q = 0; q < n; q++) {
        switch (letters[q]) {
            case 'I': break;
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y':
                p.x.set(q, true);
                p.z.set(q, true);
                break;
            default:
                throw CliffError(ErrorCode::BadPauliChar, "unexpected character '" + std::string(1, letters[q]) + "'");
        }
    }
    return p;
}

PauliOp pauli_product(const PauliOp &p1, const PauliOp &p2) {
    if (p1.n != p2.n) throw CliffError(ErrorCode::SizeMismatch, "pauli_product operands differ in length");
    PauliOp r(p1.n);
    r.z = p1.z ^ p2.z;
    r.x = p1.x ^ p2.x;
    // With Y = iXZ each letter is i^{zx} X^x Z^z; reordering the middle
    // Z^{z1} X^{x2} costs (-1)^{z1·x2}.
    long k = p1.phase_exp + p2.phase_exp;
    k += static_cast<long>((p1.z & p1.x).popcount());
    k += static_cast<long>((p2.z & p2.x).popcount());
    k -= static_cast<long>((r.z & r.x).popcount());
    k += 2 * static_cast<long>((p1.z & p2.x).popcount());
    r.phase_exp = static_cast<int>(((k % 4) + 4) % 4);
    return r;
}

bool symplectic_product(const PauliOp &p1, const PauliOp &p2) {
    if (p1.n != p2.n) throw CliffError(ErrorCode::SizeMismatch, "symplectic_product operands differ in length");
    return p1.z.dot(p2.x) ^ p1.x.dot(p2.z);
}

std::vector<PauliOp> parse_pauli_list(const std::string &text) {
    std::vector<PauliOp> out;
    std::istringstream in(text);
    std::string line;
    size_t n = BitVector::npos;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        out.push_back(parse_pauli(word, n));
        n = out.back().n;
    }
    return out;
}

}  // namespace cliffsyn
