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

#include <gtest/gtest.h>

#include "oracles.h"
#include "love/encoding.h"

using namespace love;
using namespace love::testing;

namespace {

}  // namespace

TEST(tapering, zz_examples) {
    std::vector<SignedPauli> gens = {SignedPauli::from_text("ZZ")};
    auto recs = taper({SignedPauli::from_text("XX"), SignedPauli::from_text("ZI"), SignedPauli::from_text("XI")}, gens);
    EXPECT_EQ(recs[0].logical, SignedPauli::from_text("X"));
    EXPECT_FALSE(recs[0].anticommute_mask.get(0));
    EXPECT_EQ(recs[1].logical, SignedPauli::from_text("Z"));
    EXPECT_TRUE(recs[1].mult_mask.get(0));
    EXPECT_FALSE(recs[1].anticommute_mask.get(0));
    EXPECT_EQ(recs[2].logical, SignedPauli::from_text("I"));
    EXPECT_TRUE(recs[2].anticommute_mask.get(0));
}

TEST(tapering, zz_examples_dense) {
    TaperingContext ctx;
    std::vector<SignedPauli> gens = {SignedPauli::from_text("ZZ")};
    for (const char *s : {"XX", "ZI", "XI", "YX", "IY"}) {
        auto p = SignedPauli::from_text(s);
        auto rec = taper({p}, gens, &ctx)[0];
        for (size_t l = 0; l < 2; l++) {
            auto lam = bits_of(l, 1);
            BitVector out = lam;
            out ^= rec.anticommute_mask;
            Mat lhs = dense(p) * isometry(ctx, lam);
            Mat rhs = double(syndrome_sign(rec, lam)) * isometry(ctx, out) * dense(rec.logical);
            EXPECT_TRUE(close(lhs, rhs)) << s << " lambda=" << l;
        }
    }
}

TEST(tapering, empty_generators) {
    std::vector<SignedPauli> in = {SignedPauli::from_text("-iXYZ"), SignedPauli::from_text("ZZI")};
    auto recs = taper(in, {});
    ASSERT_EQ(recs.size(), 2u);
    EXPECT_EQ(recs[0].logical, in[0]);
    EXPECT_EQ(recs[1].logical, in[1]);
    // Idempotent on its own output.
    auto again = taper({recs[0].logical}, {});
    EXPECT_EQ(again[0].logical, recs[0].logical);
}

TEST(tapering, errors) {
    EXPECT_THROW(taper({}, {SignedPauli::from_text("XI"), SignedPauli::from_text("ZI")}), std::invalid_argument);
    EXPECT_THROW(taper({}, {SignedPauli::from_text("ZZ"), SignedPauli::from_text("-ZZ")}), std::invalid_argument);
    EXPECT_THROW(taper({}, {SignedPauli::from_text("ZZ"), SignedPauli::from_text("XX"), SignedPauli::from_text("YY")}),
                 std::invalid_argument);
    EXPECT_THROW(taper({SignedPauli::from_text("XXX")}, {SignedPauli::from_text("ZZ")}), std::invalid_argument);
    EXPECT_THROW(taper({}, {SignedPauli::from_text("iZZ")}), std::invalid_argument);
    EXPECT_THROW(taper({}, {SignedPauli::from_text("ZZ"), SignedPauli::from_text("ZZI")}), std::invalid_argument);
}

TEST(tapering, syndrome_sign_examples) {
    TaperRecord rec{SignedPauli(1), BitVector::from_string("10"), BitVector(2)};
    EXPECT_EQ(syndrome_sign(rec, BitVector::from_string("00")), 1);
    EXPECT_EQ(syndrome_sign(rec, BitVector::from_string("10")), -1);
    EXPECT_EQ(syndrome_sign(rec, BitVector::from_string("01")), 1);
    EXPECT_THROW(syndrome_sign(rec, BitVector::from_string("1")), std::invalid_argument);
}

TEST(tapering, soundness_dense_random) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 2 + rng() % 5;
        size_t r = 1 + rng() % std::min<size_t>(3, n - 1);
        auto gens = random_gens(n, r, rng);
        TaperingContext ctx = make_tapering_context(gens);
        std::vector<Mat> iso;
        for (size_t l = 0; l < (size_t{1} << r); l++) {
            iso.push_back(isometry(ctx, bits_of(l, r)));
            // Isometry check.
            ASSERT_TRUE(close(iso.back().adjoint() * iso.back(), Mat::Identity(iso.back().cols(), iso.back().cols())));
        }
        for (int s = 0; s < 12; s++) {
            auto p = random_pauli(n, rng);
            auto rec = ctx.taper_one(p);
            ASSERT_EQ(rec.logical.num_qubits(), n - r);
            for (size_t l = 0; l < (size_t{1} << r); l++) {
                auto lam = bits_of(l, r);
                BitVector out = lam;
                out ^= rec.anticommute_mask;
                size_t lo = 0;
                for (size_t m = 0; m < r; m++) lo |= size_t(out.get(m)) << m;
                Mat lhs = dense(p) * iso[l];
                Mat rhs = double(syndrome_sign(rec, lam)) * iso[lo] * dense(rec.logical);
                ASSERT_TRUE(close(lhs, rhs)) << p << " gens[0]=" << gens[0] << " l=" << l;
            }
        }
    }
}

TEST(tapering, sign_matches_negated_generator_retaper) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; trial++) {
        auto gens = random_gens(6, 3, rng);
        TaperingContext ctx = make_tapering_context(gens);
        for (int s = 0; s < 10; s++) {
            auto p = random_pauli(6, rng);
            auto rec = ctx.taper_one(p);
            for (size_t l = 0; l < 8; l++) {
                auto lam = bits_of(l, 3);
                auto flipped = ctx.processed_gens;
                for (size_t m = 0; m < 3; m++) {
                    if (lam.get(m)) flipped[m] = -flipped[m];
                }
                auto re = taper({p}, flipped)[0];
                SignedPauli expect = rec.logical;
                if (syndrome_sign(rec, lam) < 0) expect = -expect;
                ASSERT_EQ(re.logical, expect);
            }
        }
    }
}

TEST(tapering, syndrome_conversion_roundtrip) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; trial++) {
        auto gens = random_gens(7, 4, rng);
        TaperingContext ctx = make_tapering_context(gens);
        for (size_t l = 0; l < 16; l++) {
            auto lam = bits_of(l, 4);
            EXPECT_EQ(ctx.original_syndrome(ctx.processed_syndrome(lam)), lam);
        }
        // Processed generators are the products named by their combination masks.
        for (size_t m = 0; m < 4; m++) {
            SignedPauli prod(7);
            for (size_t j = 0; j < 4; j++) {
                if (ctx.gen_combination[m].get(j)) prod *= gens[j];
            }
            EXPECT_EQ(prod, ctx.processed_gens[m]);
        }
    }
}

TEST(tapering, commutation_preserved) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; trial++) {
        auto gens = random_gens(8, 3, rng);
        TaperingContext ctx = make_tapering_context(gens);
        std::vector<SignedPauli> logicals;
        while (logicals.size() < 6) {
            auto p = random_pauli(8, rng);
            bool ok = true;
            for (const auto &g : gens) ok &= p.commutes(g);
            if (ok) logicals.push_back(p);
        }
        for (const auto &a : logicals)
            for (const auto &b : logicals)
                EXPECT_EQ(a.commutes(b), ctx.taper_one(a).logical.commutes(ctx.taper_one(b).logical));
    }
}

TEST(tapering, reduce_terms_merges_stabilizer_partner) {
    std::vector<SignedPauli> gens = {SignedPauli::from_text("ZZZ")};
    PauliSum h(3);
    h.add(SignedPauli::from_text("XXI"), 0.5);
    h.add(SignedPauli::from_text("XXI") * gens[0], 0.5);
    auto red = reduce_terms(h, gens);
    ASSERT_EQ(red.size(), 1u);
    EXPECT_NEAR(std::abs(red.terms()[0].coef), 1.0, 1e-12);
    PauliSum cancel(3);
    cancel.add(SignedPauli::from_text("XXI"), 0.5);
    cancel.add(SignedPauli::from_text("XXI") * gens[0], -0.5);
    EXPECT_EQ(reduce_terms(cancel, gens).size(), 0u);
}

TEST(tapering, reduce_terms_codespace_equivalence) {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 3 + rng() % 4;
        size_t r = 1 + rng() % 2;
        auto gens = random_gens(n, r, rng);
        auto group = stabilizer_group(gens);
        PauliSum h(n);
        for (int t = 0; t < 6; t++) {
            auto p = random_pauli(n, rng, false);
            h.add(p, u(rng));
            h.add(p * group[rng() % group.size()], u(rng));
        }
        auto red = reduce_terms(h, gens);
        size_t D = size_t{1} << n;
        Mat proj = Mat::Identity(D, D);
        for (const auto &g : gens) proj = proj * (Mat::Identity(D, D) + dense(g)) * 0.5;
        EXPECT_TRUE(close(dense(red) * proj, dense(h) * proj, 1e-9));
        EXPECT_LE(red.size(), h.size());
        EXPECT_LE(red.l1_norm(), h.l1_norm() + 1e-12);
    }
}

TEST(tapering, reduce_terms_picks_low_weight_representative) {
    std::vector<SignedPauli> gens = {SignedPauli::from_text("XXXX")};
    PauliSum h(4);
    h.add(SignedPauli::from_text("YXXX"), 1.0);  // -iZ on the code space
    h.add(SignedPauli::from_text("ZIII"), 1.0);
    auto red = reduce_terms(h, gens);
    ASSERT_EQ(red.size(), 1u);
    EXPECT_EQ(red.terms()[0].pauli.weight(), 1u);
}

TEST(tapering, hubbard_fixtures_match_jw_norm) {
    for (const char *name : {"compact_hubbard_2x3", "gse_hubbard_2x3"}) {
        auto enc = load_encoding(std::string(LOVE_FIXTURE_DIR) + "/" + name + ".yaml");
        const auto &xy = enc.graph.coords;
        ASSERT_EQ(xy.size(), 12u);
        FermionSum f;
        f.n_modes = 12;
        for (uint32_t a = 0; a < 12; a++) {
            for (uint32_t b = a + 1; b < 12; b++) {
                int dx = std::abs(xy[a][0] - xy[b][0]), dy = std::abs(xy[a][1] - xy[b][1]);
                bool same_spin = (xy[a][0] < 2) == (xy[b][0] < 2);
                if (same_spin && dx + dy == 1) f.add_hopping(-1.0, a, b);
                if (dx == 2 && dy == 0 && !same_spin) f.add_density_density(4.0, a, b);
            }
        }
        std::vector<uint32_t> ord(12);
        for (uint32_t k = 0; k < 12; k++) ord[k] = k;
        auto jw = encode_hamiltonian(build_jordan_wigner(ord), f);
        auto raw = encode_hamiltonian(enc, f);
        auto red = reduce_terms(raw, enc.stabilizers);
        EXPECT_EQ(red.size(), jw.size()) << name;
        EXPECT_NEAR(red.l1_norm(), jw.l1_norm(), 1e-9) << name;
        EXPECT_LE(red.size(), raw.size());
    }
}
