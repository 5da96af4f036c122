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

#include "love/bits.h"

#include <stdexcept>

namespace love {

BitVector BitVector::from_string(const std::string &s) {
    BitVector b(s.size());
    for (size_t k = 0; k < s.size(); k++) {
        if (s[k] == '1') {
            b.set(k);
        } else if (s[k] != '0') {
            throw std::invalid_argument("bit string must contain only 0/1: " + s);
        }
    }
    return b;
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (size_t k = 0; k < n_; k++) {
        if (get(k)) s[k] = '1';
    }
    return s;
}

BitVector symplectic_vector(const SignedPauli &p) {
    size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (size_t q = 0; q < n; q++) {
        if (p.x_bit(q)) v.set(q);
        if (p.z_bit(q)) v.set(n + q);
    }
    return v;
}

bool Gf2Basis::insert(const BitVector &v0) {
    if (v0.size() != width_) {
        throw std::invalid_argument("GF(2) row width mismatch");
    }
    if (inserted_ >= combo_width_) {
        combo_width_ *= 2;
        for (auto &c : combos_) {
            BitVector wider(combo_width_);
            for (size_t k = 0; k < c.size(); k++) {
                if (c.get(k)) wider.set(k);
            }
            c = wider;
        }
    }
    BitVector v = v0;
    BitVector combo(combo_width_);
    combo.set(inserted_);
    for (size_t k = 0; k < rows_.size(); k++) {
        if (v.get(pivots_[k])) {
            v ^= rows_[k];
            combo ^= combos_[k];
        }
    }
    inserted_++;
    int h = v.highest();
    if (h < 0) {
        return false;
    }
    // Keep rows fully reduced on pivot columns.
    for (size_t k = 0; k < rows_.size(); k++) {
        if (rows_[k].get(h)) {
            rows_[k] ^= v;
            combos_[k] ^= combo;
        }
    }
    rows_.push_back(v);
    pivots_.push_back(h);
    combos_.push_back(combo);
    return true;
}

std::optional<BitVector> Gf2Basis::express(const BitVector &v0) const {
    BitVector v = v0;
    BitVector combo(combo_width_);
    for (size_t k = 0; k < rows_.size(); k++) {
        if (v.get(pivots_[k])) {
            v ^= rows_[k];
            combo ^= combos_[k];
        }
    }
    if (v.any()) {
        return std::nullopt;
    }
    BitVector out(inserted_);
    for (size_t k = 0; k < inserted_; k++) {
        if (combo.get(k)) out.set(k);
    }
    return out;
}

size_t gf2_rank(const std::vector<BitVector> &rows) {
    if (rows.empty()) return 0;
    Gf2Basis b(rows[0].size());
    for (const auto &r : rows) b.insert(r);
    return b.rank();
}

std::optional<Gf2Matrix> gf2_inverse(const Gf2Matrix &m) {
    size_t n = m.size();
    Gf2Matrix a = m;
    Gf2Matrix inv(n, std::vector<uint8_t>(n, 0));
    for (size_t i = 0; i < n; i++) {
        if (a[i].size() != n) {
            throw std::invalid_argument("GF(2) matrix must be square");
        }
        inv[i][i] = 1;
    }
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        while (piv < n && !a[piv][col]) piv++;
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        for (size_t r = 0; r < n; r++) {
            if (r != col && a[r][col]) {
                for (size_t c = 0; c < n; c++) {
                    a[r][c] ^= a[col][c];
                    inv[r][c] ^= inv[col][c];
                }
            }
        }
    }
    return inv;
}

}  // namespace love
