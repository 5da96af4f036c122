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

#ifndef LOVE_TAPERING_H
#define LOVE_TAPERING_H

#include <vector>

#include "love/bits.h"
#include "love/pauli.h"
#include "love/pauli_sum.h"

namespace love {

/// Logical image of one physical string.
struct TaperRecord {
    SignedPauli logical;         // on n - r qubits, at the trivial syndrome
    BitVector mult_mask;         // processed generators multiplied into p
    BitVector anticommute_mask;  // processed generators anticommuting with p
};

/// Round-by-round data of the elimination.
///
/// Syndrome bits are always relative to `processed_gens`; `gen_combination`
/// converts from the original generator list.
class TaperingContext {
   public:
    size_t n_qubits = 0;
    std::vector<SignedPauli> original_gens;
    /// Generator eliminated in round m, as a full-length string.
    std::vector<SignedPauli> processed_gens;
    /// Original generators whose product is processed_gens[m].
    std::vector<BitVector> gen_combination;
    std::vector<size_t> removed_qubits;
    /// Letter u of round m; (u,v,w) is one of XYZ, YXZ, ZYX.
    std::vector<char> u_letters;
    std::vector<size_t> kept_qubits;

    size_t r() const { return processed_gens.size(); }
    size_t n_logical() const { return kept_qubits.size(); }
    static char v_of(char u) { return u == 'Y' ? 'X' : 'Y'; }
    static char w_of(char u) { return u == 'Z' ? 'X' : 'Z'; }

    TaperRecord taper_one(const SignedPauli &p) const;
    /// Syndrome of the processed generators given one of the originals.
    BitVector processed_syndrome(const BitVector &original) const;
    /// Inverse of processed_syndrome.
    BitVector original_syndrome(const BitVector &processed) const;
};

/// Builds the context; throws on invalid generator lists.
TaperingContext make_tapering_context(const std::vector<SignedPauli> &gens);

std::vector<TaperRecord> taper(const std::vector<SignedPauli> &strings, const std::vector<SignedPauli> &gens,
                               TaperingContext *ctx_out = nullptr);

/// (-1)^<mult_mask, lambda>, lambda being the syndrome the string acts on.
int syndrome_sign(const TaperRecord &rec, const BitVector &lambda);

/// Recombines terms that coincide on the code space.
PauliSum reduce_terms(const PauliSum &h, const std::vector<SignedPauli> &gens, double drop_tol = 1e-12);

}  // namespace love

#endif
