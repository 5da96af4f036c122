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

#ifndef LOVE_BITS_H
#define LOVE_BITS_H

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "love/pauli.h"

namespace love {

/// Fixed-length bit string (syndromes, masks, GF(2) rows).
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), w_((n + 63) >> 6, 0) {}
    static BitVector from_string(const std::string &s);

    size_t size() const { return n_; }
    bool get(size_t k) const { return (w_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool v = true) {
        uint64_t m = uint64_t{1} << (k & 63);
        w_[k >> 6] = v ? (w_[k >> 6] | m) : (w_[k >> 6] & ~m);
    }
    void flip(size_t k) { w_[k >> 6] ^= uint64_t{1} << (k & 63); }
    bool any() const {
        for (uint64_t w : w_) {
            if (w) return true;
        }
        return false;
    }
    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    BitVector &operator^=(const BitVector &o) {
        for (size_t k = 0; k < w_.size(); k++) w_[k] ^= o.w_[k];
        return *this;
    }
    /// Parity of the bitwise AND.
    bool dot(const BitVector &o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < w_.size(); k++) acc ^= w_[k] & o.w_[k];
        return std::popcount(acc) & 1;
    }
    int highest() const {
        for (size_t k = w_.size(); k-- > 0;) {
            if (w_[k]) return static_cast<int>(k * 64 + 63 - std::countl_zero(w_[k]));
        }
        return -1;
    }
    const std::vector<uint64_t> &words() const { return w_; }
    std::vector<uint64_t> &words() { return w_; }
    std::string str() const;

    bool operator==(const BitVector &o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector &o) const { return !(*this == o); }
    bool operator<(const BitVector &o) const { return n_ != o.n_ ? n_ < o.n_ : w_ < o.w_; }

   private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

struct BitVectorHash {
    size_t operator()(const BitVector &b) const {
        uint64_t h = b.size();
        for (uint64_t w : b.words()) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return static_cast<size_t>(h);
    }
};

/// Concatenated (x | z) symplectic vector of a Pauli string, phase dropped.
BitVector symplectic_vector(const SignedPauli &p);

/// Incremental GF(2) row echelon basis.
class Gf2Basis {
   public:
    explicit Gf2Basis(size_t width) : width_(width) {}
    /// Records v; returns false when it is dependent on earlier rows.
    bool insert(const BitVector &v);
    /// Returns the combination of inserted rows equal to v, if any.
    std::optional<BitVector> express(const BitVector &v) const;
    size_t rank() const { return rows_.size(); }
    size_t width() const { return width_; }

   private:
    size_t width_;
    std::vector<BitVector> rows_;    // reduced rows, sorted by pivot insertion
    std::vector<int> pivots_;
    std::vector<BitVector> combos_;  // which inserted rows make up each reduced row
    size_t inserted_ = 0;
    size_t combo_width_ = 64;
};

size_t gf2_rank(const std::vector<BitVector> &rows);

/// Dense square matrix over GF(2), row-major.
using Gf2Matrix = std::vector<std::vector<uint8_t>>;
std::optional<Gf2Matrix> gf2_inverse(const Gf2Matrix &m);

}  // namespace love

#endif
