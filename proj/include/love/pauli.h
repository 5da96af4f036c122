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

#ifndef LOVE_PAULI_H
#define LOVE_PAULI_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace love {

enum class CliffordGate : uint8_t {
    CNOT,
    H,
    S,
    S_DAG,
    RY_PLUS,   // Ry(+pi/2)
    RY_MINUS,  // Ry(-pi/2)
    RX_PLUS,   // Rx(+pi/2)
    RX_MINUS,  // Rx(-pi/2)
};

const char *gate_name(CliffordGate g);
CliffordGate clifford_inverse(CliffordGate g);

/// A Pauli string with an exact global phase.
///
/// Stored as i^k X^x Z^z with one (x, z) bit pair per qubit. A qubit with both
/// bits set is Y up to the factor i (Y = iXZ), so the phase exposed by
/// `phase_exp()` is the one in front of the {I,X,Y,Z} letters.
class SignedPauli {
   public:
    SignedPauli() = default;
    explicit SignedPauli(size_t num_qubits);

    /// Parses "+XYZ", "-iIZ", "XX", ... with qubit 0 leftmost.
    static SignedPauli from_text(std::string_view text);
    static SignedPauli single(size_t num_qubits, size_t qubit, char letter);
    /// Letters are given per qubit; phase_exp multiplies the letter product.
    static SignedPauli from_letters(std::string_view letters, uint8_t phase_exp = 0);

    size_t num_qubits() const { return n_; }
    size_t num_words() const { return xs_.size(); }

    /// Phase i^k in front of the letter product.
    uint8_t phase_exp() const;
    void set_phase_exp(uint8_t k);
    /// Phase in the X^x Z^z representation.
    uint8_t raw_phase() const { return log_i_; }

    char letter(size_t q) const;
    void set_letter(size_t q, char letter);
    bool x_bit(size_t q) const { return (xs_[q >> 6] >> (q & 63)) & 1; }
    bool z_bit(size_t q) const { return (zs_[q >> 6] >> (q & 63)) & 1; }
    const std::vector<uint64_t> &xs() const { return xs_; }
    const std::vector<uint64_t> &zs() const { return zs_; }
    /// First word of the masks; convenient when num_qubits <= 64.
    uint64_t x_word() const { return xs_.empty() ? 0 : xs_[0]; }
    uint64_t z_word() const { return zs_.empty() ? 0 : zs_[0]; }

    size_t weight() const;
    bool is_identity() const;  // ignoring phase
    bool is_hermitian() const { return (phase_exp() & 1) == 0; }
    bool commutes(const SignedPauli &other) const;

    /// this = this * rhs.
    SignedPauli &operator*=(const SignedPauli &rhs);
    /// this = lhs * this.
    SignedPauli &left_mul(const SignedPauli &lhs);
    SignedPauli &times_i(uint8_t k) {
        log_i_ = (log_i_ + k) & 3;
        return *this;
    }
    SignedPauli operator-() const {
        SignedPauli r = *this;
        r.times_i(2);
        return r;
    }

    /// In-place g p g^dagger. `q1` is the target for CNOT and ignored otherwise.
    SignedPauli &conjugate_inplace(CliffordGate g, size_t q0, size_t q1 = 0);

    SignedPauli remove_qubit(size_t q) const;
    /// Keeps the listed qubits in order, dropping the rest (phase untouched).
    SignedPauli select_qubits(const std::vector<size_t> &keep) const;
    /// Same letters, phase reset to +1.
    SignedPauli unsigned_copy() const;

    std::string str() const;

    bool operator==(const SignedPauli &o) const {
        return n_ == o.n_ && log_i_ == o.log_i_ && xs_ == o.xs_ && zs_ == o.zs_;
    }
    bool operator!=(const SignedPauli &o) const { return !(*this == o); }
    /// Same letters, any phase.
    bool same_letters(const SignedPauli &o) const { return n_ == o.n_ && xs_ == o.xs_ && zs_ == o.zs_; }
    /// Total order on letters then phase; used for deterministic tie-breaks.
    bool operator<(const SignedPauli &o) const;
    size_t letters_hash() const;

   private:
    size_t n_ = 0;
    uint8_t log_i_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;

    void check_same_size(const SignedPauli &o) const;
    void check_qubit(size_t q) const;
};

SignedPauli operator*(const SignedPauli &a, const SignedPauli &b);
inline bool commutes(const SignedPauli &a, const SignedPauli &b) { return a.commutes(b); }
inline size_t weight(const SignedPauli &p) { return p.weight(); }
SignedPauli conjugate_by_clifford(const SignedPauli &p, CliffordGate g, size_t q0, size_t q1 = 0);
inline SignedPauli remove_qubit(const SignedPauli &p, size_t q) { return p.remove_qubit(q); }

struct LettersHash {
    size_t operator()(const SignedPauli &p) const { return p.letters_hash(); }
};
struct LettersEqual {
    bool operator()(const SignedPauli &a, const SignedPauli &b) const { return a.same_letters(b); }
};

std::ostream &operator<<(std::ostream &out, const SignedPauli &p);

}  // namespace love

#endif
