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

#include "love/tapering.h"

#include <map>
#include <stdexcept>
#include <string>

namespace love {

namespace {

bool multiply_rule(char u, char sigma) { return sigma == u || sigma == TaperingContext::v_of(u); }

}  // namespace

TaperingContext make_tapering_context(const std::vector<SignedPauli> &gens) {
    TaperingContext ctx;
    size_t r = gens.size();
    ctx.n_qubits = r ? gens[0].num_qubits() : 0;
    for (size_t m = 0; m < r; m++) {
        if (gens[m].num_qubits() != ctx.n_qubits) {
            throw std::invalid_argument("generator " + std::to_string(m) + " has the wrong length");
        }
        if (!gens[m].is_hermitian()) {
            throw std::invalid_argument("generator " + gens[m].str() + " does not square to +I");
        }
        for (size_t j = 0; j < m; j++) {
            if (!gens[m].commutes(gens[j])) {
                throw std::invalid_argument("generators " + std::to_string(j) + " and " + std::to_string(m) +
                                            " anticommute");
            }
        }
    }
    if (ctx.n_qubits && r > ctx.n_qubits) {
        throw std::invalid_argument("more generators than qubits");
    }
    ctx.original_gens = gens;
    std::vector<SignedPauli> work = gens;
    std::vector<BitVector> combo(r, BitVector(r));
    for (size_t m = 0; m < r; m++) combo[m].set(m);
    std::vector<bool> removed(ctx.n_qubits, false);
    for (size_t m = 0; m < r; m++) {
        const SignedPauli &S = work[m];
        size_t index = ctx.n_qubits;
        for (size_t q = 0; q < ctx.n_qubits; q++) {
            if (!removed[q] && S.letter(q) != 'I') {
                index = q;
                break;
            }
        }
        if (index == ctx.n_qubits) {
            throw std::invalid_argument("generator " + gens[m].str() + " is dependent on earlier generators");
        }
        char u = S.letter(index);
        for (size_t j = m + 1; j < r; j++) {
            if (multiply_rule(u, work[j].letter(index))) {
                work[j] *= S;
                combo[j] ^= combo[m];
            }
        }
        removed[index] = true;
        ctx.removed_qubits.push_back(index);
        ctx.u_letters.push_back(u);
        ctx.processed_gens.push_back(S);
        ctx.gen_combination.push_back(combo[m]);
    }
    for (size_t q = 0; q < ctx.n_qubits; q++) {
        if (!removed[q]) ctx.kept_qubits.push_back(q);
    }
    return ctx;
}

TaperRecord TaperingContext::taper_one(const SignedPauli &p) const {
    size_t rr = r();
    if (rr && p.num_qubits() != n_qubits) {
        throw std::invalid_argument("string " + p.str() + " does not match the generator length");
    }
    TaperRecord rec{p, BitVector(rr), BitVector(rr)};
    if (rr == 0) return rec;
    SignedPauli cur = p;
    for (size_t m = 0; m < rr; m++) {
        if (!p.commutes(processed_gens[m])) rec.anticommute_mask.set(m);
        if (multiply_rule(u_letters[m], cur.letter(removed_qubits[m]))) {
            cur *= processed_gens[m];
            rec.mult_mask.set(m);
        }
    }
    // Removed positions now hold I or w, both acting as +1 on |w>.
    rec.logical = cur.select_qubits(kept_qubits);
    return rec;
}

BitVector TaperingContext::processed_syndrome(const BitVector &original) const {
    if (original.size() != r()) throw std::invalid_argument("syndrome length mismatch");
    BitVector out(r());
    for (size_t m = 0; m < r(); m++) out.set(m, gen_combination[m].dot(original));
    return out;
}

BitVector TaperingContext::original_syndrome(const BitVector &processed) const {
    if (processed.size() != r()) throw std::invalid_argument("syndrome length mismatch");
    // gen_combination is unit upper triangular in the round order; back-substitute.
    BitVector out(r());
    for (size_t m = 0; m < r(); m++) {
        bool v = processed.get(m);
        for (size_t j = 0; j < m; j++) {
            if (gen_combination[m].get(j) && out.get(j)) v = !v;
        }
        out.set(m, v);
    }
    return out;
}

std::vector<TaperRecord> taper(const std::vector<SignedPauli> &strings, const std::vector<SignedPauli> &gens,
                               TaperingContext *ctx_out) {
    TaperingContext ctx = make_tapering_context(gens);
    std::vector<TaperRecord> out;
    out.reserve(strings.size());
    for (const auto &p : strings) out.push_back(ctx.taper_one(p));
    if (ctx_out) *ctx_out = std::move(ctx);
    return out;
}

int syndrome_sign(const TaperRecord &rec, const BitVector &lambda) {
    if (lambda.size() != rec.mult_mask.size()) {
        throw std::invalid_argument("syndrome has length " + std::to_string(lambda.size()) + ", expected " +
                                    std::to_string(rec.mult_mask.size()));
    }
    return rec.mult_mask.dot(lambda) ? -1 : 1;
}

PauliSum reduce_terms(const PauliSum &h, const std::vector<SignedPauli> &gens, double drop_tol) {
    TaperingContext ctx = make_tapering_context(gens);
    static const cplx kPhase[4] = {1.0, cplx(0, 1), -1.0, cplx(0, -1)};
    struct Group {
        cplx sum = 0;
        size_t rep = 0;
        cplx rep_phase = 1;
    };
    // Keyed by (logical letters, flip pattern).
    std::map<std::pair<std::string, std::string>, Group> groups;
    std::vector<std::pair<std::string, std::string>> order;
    const auto &terms = h.terms();
    for (size_t t = 0; t < terms.size(); t++) {
        TaperRecord rec = ctx.taper_one(terms[t].pauli);
        cplx c = kPhase[rec.logical.phase_exp()];
        rec.logical.set_phase_exp(0);
        auto key = std::make_pair(rec.logical.str(), rec.anticommute_mask.str());
        auto [it, fresh] = groups.try_emplace(key);
        Group &g = it->second;
        g.sum += terms[t].coef * c;
        const SignedPauli &p = terms[t].pauli;
        const SignedPauli &best = terms[g.rep].pauli;
        if (fresh || p.weight() < best.weight() || (p.weight() == best.weight() && p.str() < best.str())) {
            g.rep = t;
            g.rep_phase = c;
        }
        if (fresh) order.push_back(key);
    }
    PauliSum out(h.num_qubits());
    for (const auto &key : order) {
        const Group &g = groups[key];
        cplx coef = g.sum / g.rep_phase;
        if (std::abs(coef) < drop_tol) continue;
        out.add(terms[g.rep].pauli, coef);
    }
    return out;
}

}  // namespace love
