// Copyright 2026 The love-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "love/pauli.h"

#include <bit>
#include <ostream>

namespace love {

namespace {

size_t words_for(size_t n) { return (n + 63) >> 6; }

uint8_t popcount_and_mod4(const std::vector<uint64_t> &a, const std::vector<uint64_t> &b) {
    uint64_t total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        total += std::popcount(a[k] & b[k]);
    }
    return total & 3;
}

}  // namespace

const char *gate_name(CliffordGate g) {
    switch (g) {
        case CliffordGate::CNOT:
            return "CNOT";
        case CliffordGate::H:
            return "H";
        case CliffordGate::S:
            return "S";
        case CliffordGate::S_DAG:
            return "S_DAG";
        case CliffordGate::RY_PLUS:
            return "RY_PLUS";
        case CliffordGate::RY_MINUS:
            return "RY_MINUS";
        case CliffordGate::RX_PLUS:
            return "RX_PLUS";
        case CliffordGate::RX_MINUS:
            return "RX_MINUS";
    }
    throw std::invalid_argument("unknown Clifford gate tag");
}

CliffordGate clifford_inverse(CliffordGate g) {
    switch (g) {
        case CliffordGate::CNOT:
        case CliffordGate::H:
            return g;
        case CliffordGate::S:
            return CliffordGate::S_DAG;
        case CliffordGate::S_DAG:
            return CliffordGate::S;
        case CliffordGate::RY_PLUS:
            return CliffordGate::RY_MINUS;
        case CliffordGate::RY_MINUS:
            return CliffordGate::RY_PLUS;
        case CliffordGate::RX_PLUS:
            return CliffordGate::RX_MINUS;
        case CliffordGate::RX_MINUS:
            return CliffordGate::RX_PLUS;
    }
    throw std::invalid_argument("unknown Clifford gate tag");
}

SignedPauli::SignedPauli(size_t num_qubits)
    : n_(num_qubits), log_i_(0), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {
}

SignedPauli SignedPauli::from_letters(std::string_view letters, uint8_t phase_exp) {
    SignedPauli p(letters.size());
    for (size_t q = 0; q < letters.size(); q++) {
        p.set_letter(q, letters[q]);
    }
    p.set_phase_exp(phase_exp);
    return p;
}

SignedPauli SignedPauli::from_text(std::string_view text) {
    uint8_t k = 0;
    size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            k = 2;
        }
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        k = (k + 1) & 3;
        pos++;
    }
    std::string_view body = text.substr(pos);
    for (char c : body) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z' && c != '_') {
            throw std::invalid_argument("bad Pauli string text: '" + std::string(text) + "'");
        }
    }
    return from_letters(body, k);
}

SignedPauli SignedPauli::single(size_t num_qubits, size_t qubit, char letter) {
    SignedPauli p(num_qubits);
    p.set_letter(qubit, letter);
    return p;
}

uint8_t SignedPauli::phase_exp() const {
    return (log_i_ + 4 - popcount_and_mod4(xs_, zs_)) & 3;
}

void SignedPauli::set_phase_exp(uint8_t k) {
    log_i_ = (k + popcount_and_mod4(xs_, zs_)) & 3;
}

void SignedPauli::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n_) +
                                "-qubit Pauli string");
    }
}

void SignedPauli::check_same_size(const SignedPauli &o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("Pauli string length mismatch: " + std::to_string(n_) + " vs " +
                                    std::to_string(o.n_));
    }
}

char SignedPauli::letter(size_t q) const {
    check_qubit(q);
    return "IXZY"[x_bit(q) | (z_bit(q) << 1)];
}

void SignedPauli::set_letter(size_t q, char letter) {
    check_qubit(q);
    uint8_t k = phase_exp();
    bool x = letter == 'X' || letter == 'Y';
    bool z = letter == 'Z' || letter == 'Y';
    if (letter != 'I' && letter != '_' && !x && !z) {
        throw std::invalid_argument(std::string("bad Pauli letter '") + letter + "'");
    }
    uint64_t m = uint64_t{1} << (q & 63);
    xs_[q >> 6] = x ? (xs_[q >> 6] | m) : (xs_[q >> 6] & ~m);
    zs_[q >> 6] = z ? (zs_[q >> 6] | m) : (zs_[q >> 6] & ~m);
    set_phase_exp(k);
}

size_t SignedPauli::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

bool SignedPauli::is_identity() const {
    for (size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            return false;
        }
    }
    return true;
}

bool SignedPauli::commutes(const SignedPauli &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        acc ^= (xs_[k] & other.zs_[k]) ^ (zs_[k] & other.xs_[k]);
    }
    return (std::popcount(acc) & 1) == 0;
}

SignedPauli &SignedPauli::operator*=(const SignedPauli &rhs) {
    check_same_size(rhs);
    uint64_t cnt = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        cnt += std::popcount(zs_[k] & rhs.xs_[k]);
        xs_[k] ^= rhs.xs_[k];
        zs_[k] ^= rhs.zs_[k];
    }
    log_i_ = (log_i_ + rhs.log_i_ + 2 * (cnt & 1)) & 3;
    return *this;
}

SignedPauli &SignedPauli::left_mul(const SignedPauli &lhs) {
    check_same_size(lhs);
    uint64_t cnt = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        cnt += std::popcount(lhs.zs_[k] & xs_[k]);
        xs_[k] ^= lhs.xs_[k];
        zs_[k] ^= lhs.zs_[k];
    }
    log_i_ = (log_i_ + lhs.log_i_ + 2 * (cnt & 1)) & 3;
    return *this;
}

SignedPauli operator*(const SignedPauli &a, const SignedPauli &b) {
    SignedPauli r = a;
    r *= b;
    return r;
}

SignedPauli &SignedPauli::conjugate_inplace(CliffordGate g, size_t q0, size_t q1) {
    check_qubit(q0);
    size_t w0 = q0 >> 6;
    uint64_t m0 = uint64_t{1} << (q0 & 63);
    bool a = xs_[w0] & m0;
    bool b = zs_[w0] & m0;
    auto put = [&](bool x, bool z) {
        xs_[w0] = x ? (xs_[w0] | m0) : (xs_[w0] & ~m0);
        zs_[w0] = z ? (zs_[w0] | m0) : (zs_[w0] & ~m0);
    };
    // Each rule maps X^a Z^b on the qubit and returns the extra power of i.
    switch (g) {
        case CliffordGate::CNOT: {
            check_qubit(q1);
            if (q0 == q1) {
                throw std::invalid_argument("CNOT control equals target");
            }
            size_t w1 = q1 >> 6;
            uint64_t m1 = uint64_t{1} << (q1 & 63);
            // X_c -> X_c X_t, Z_t -> Z_c Z_t; no sign in the X^x Z^z form.
            if (a) {
                xs_[w1] ^= m1;
            }
            if (zs_[w1] & m1) {
                zs_[w0] ^= m0;
            }
            return *this;
        }
        case CliffordGate::H:
            put(b, a);
            log_i_ = (log_i_ + 2 * (a & b)) & 3;
            return *this;
        case CliffordGate::S:
            put(a, a ^ b);
            log_i_ = (log_i_ + a) & 3;
            return *this;
        case CliffordGate::S_DAG:
            put(a, a ^ b);
            log_i_ = (log_i_ + 3 * a) & 3;
            return *this;
        case CliffordGate::RY_PLUS:
            // Z -> X, X -> -Z.
            put(b, a);
            log_i_ = (log_i_ + 2 * ((a + (a & b)) & 1)) & 3;
            return *this;
        case CliffordGate::RY_MINUS:
            // Z -> -X, X -> Z.
            put(b, a);
            log_i_ = (log_i_ + 2 * ((b + (a & b)) & 1)) & 3;
            return *this;
        case CliffordGate::RX_PLUS:
            // Y -> Z, Z -> -Y.
            put(a ^ b, b);
            log_i_ = (log_i_ + 3 * b) & 3;
            return *this;
        case CliffordGate::RX_MINUS:
            // Y -> -Z, Z -> Y.
            put(a ^ b, b);
            log_i_ = (log_i_ + b) & 3;
            return *this;
    }
    throw std::invalid_argument("unknown Clifford gate tag");
}

SignedPauli conjugate_by_clifford(const SignedPauli &p, CliffordGate g, size_t q0, size_t q1) {
    SignedPauli r = p;
    r.conjugate_inplace(g, q0, q1);
    return r;
}

SignedPauli SignedPauli::remove_qubit(size_t q) const {
    check_qubit(q);
    std::vector<size_t> keep;
    keep.reserve(n_ - 1);
    for (size_t k = 0; k < n_; k++) {
        if (k != q) {
            keep.push_back(k);
        }
    }
    return select_qubits(keep);
}

SignedPauli SignedPauli::select_qubits(const std::vector<size_t> &keep) const {
    SignedPauli r(keep.size());
    uint8_t k = phase_exp();
    for (size_t j = 0; j < keep.size(); j++) {
        size_t q = keep[j];
        check_qubit(q);
        uint64_t m = uint64_t{1} << (j & 63);
        if (x_bit(q)) {
            r.xs_[j >> 6] |= m;
        }
        if (z_bit(q)) {
            r.zs_[j >> 6] |= m;
        }
    }
    r.set_phase_exp(k);
    return r;
}

SignedPauli SignedPauli::unsigned_copy() const {
    SignedPauli r = *this;
    r.set_phase_exp(0);
    return r;
}

std::string SignedPauli::str() const {
    static const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[phase_exp()];
    s.reserve(s.size() + n_);
    for (size_t q = 0; q < n_; q++) {
        s.push_back(letter(q));
    }
    return s;
}

bool SignedPauli::operator<(const SignedPauli &o) const {
    if (n_ != o.n_) {
        return n_ < o.n_;
    }
    for (size_t q = 0; q < n_; q++) {
        char a = letter(q), b = o.letter(q);
        if (a != b) {
            return a < b;
        }
    }
    return phase_exp() < o.phase_exp();
}

size_t SignedPauli::letters_hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
    for (size_t k = 0; k < xs_.size(); k++) {
        h ^= xs_[k] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= zs_[k] * 0xff51afd7ed558ccdULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
}

std::ostream &operator<<(std::ostream &out, const SignedPauli &p) { return out << p.str(); }

}  // namespace love
