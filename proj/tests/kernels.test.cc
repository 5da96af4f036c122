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

#include "love/kernels.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "dense.h"

using namespace love;
using namespace love::testing;

namespace {

std::vector<cplx> random_state(size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> v(dim);
    for (auto &a : v) a = {g(rng), g(rng)};
    return v;
}

SignedPauli raw_pauli(size_t n, uint64_t x, uint64_t z) {
    SignedPauli p(n);
    for (size_t q = 0; q < n; q++) {
        bool xb = (x >> q) & 1, zb = (z >> q) & 1;
        p.set_letter(q, xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
    }
    // X^x Z^z = (-i)^{#Y} * letters
    p.set_phase_exp(static_cast<uint8_t>((4 - std::popcount(x & z) % 4) % 4));
    return p;
}

double max_diff(const std::vector<cplx> &a, const std::vector<cplx> &b) {
    double m = 0;
    for (size_t k = 0; k < a.size(); k++) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

std::vector<const KernelTable *> all_tables() {
    std::vector<const KernelTable *> t{&scalar_kernels()};
    if (auto *a = avx2_kernels()) t.push_back(a);
    return t;
}

}  // namespace

TEST(kernels, raw_pauli_matches_action) {
    std::mt19937_64 rng(3);
    for (size_t n = 1; n <= 3; n++) {
        size_t dim = size_t{1} << n;
        for (int trial = 0; trial < 10; trial++) {
            uint64_t x = rng() & (dim - 1), z = rng() & (dim - 1);
            Mat m = dense(raw_pauli(n, x, z));
            // column b maps to (-1)^{z.b} |b^x>
            for (size_t b = 0; b < dim; b++) {
                double s = (std::popcount(z & b) & 1) ? -1 : 1;
                EXPECT_NEAR(std::abs(m(b ^ x, b) - s), 0, 1e-12);
            }
        }
    }
}

TEST(kernels, apply_sum_matches_dense) {
    std::mt19937_64 rng(5);
    for (const KernelTable *t : all_tables()) {
        for (size_t n = 1; n <= 6; n++) {
            size_t dim = size_t{1} << n;
            auto in = random_state(dim, rng);
            std::vector<PauliAction> acts;
            Mat op = Mat::Zero(dim, dim);
            for (int k = 0; k < 3; k++) {
                PauliAction a{rng() & (dim - 1), rng() & (dim - 1), cplx(0.3 * k - 0.2, 0.7 - 0.1 * k)};
                acts.push_back(a);
                op += a.coef * dense(raw_pauli(n, a.x, a.z));
            }
            std::vector<cplx> out(dim);
            t->apply_sum(in.data(), out.data(), dim, acts.data(), acts.size());
            Vec vin = Eigen::Map<Vec>(in.data(), dim);
            Vec expect = op * vin;
            for (size_t c = 0; c < dim; c++) EXPECT_NEAR(std::abs(out[c] - expect(c)), 0, 1e-12) << t->name;
        }
    }
}

TEST(kernels, expectation_inner_norm_match_dense) {
    std::mt19937_64 rng(7);
    for (const KernelTable *t : all_tables()) {
        for (size_t n = 1; n <= 6; n++) {
            size_t dim = size_t{1} << n;
            auto a = random_state(dim, rng), b = random_state(dim, rng);
            Vec va = Eigen::Map<Vec>(a.data(), dim), vb = Eigen::Map<Vec>(b.data(), dim);
            uint64_t x = rng() & (dim - 1), z = rng() & (dim - 1);
            C e = va.dot(dense(raw_pauli(n, x, z)) * va);
            EXPECT_NEAR(std::abs(t->expectation(a.data(), dim, x, z) - e), 0, 1e-10) << t->name;
            EXPECT_NEAR(std::abs(t->inner(a.data(), b.data(), dim) - va.dot(vb)), 0, 1e-10);
            EXPECT_NEAR(t->norm2(a.data(), dim), va.squaredNorm(), 1e-10);
        }
    }
}

TEST(kernels, rank1_and_trace_match_dense) {
    std::mt19937_64 rng(9);
    for (const KernelTable *t : all_tables()) {
        size_t n = 4, dim = 16;
        auto a = random_state(dim, rng);
        std::vector<cplx> rho(dim * dim, 0.0);
        t->rank1_update(rho.data(), a.data(), dim, 0.5);
        Vec va = Eigen::Map<Vec>(a.data(), dim);
        Mat expect = 0.5 * va * va.adjoint();
        for (size_t i = 0; i < dim; i++)
            for (size_t j = 0; j < dim; j++) EXPECT_NEAR(std::abs(rho[i * dim + j] - expect(i, j)), 0, 1e-12);
        for (int trial = 0; trial < 20; trial++) {
            uint64_t x = rng() & 15, z = rng() & 15;
            C tr = (expect * dense(raw_pauli(n, x, z))).trace();
            EXPECT_NEAR(std::abs(trace_pauli(rho.data(), dim, x, z) - tr), 0, 1e-12);
        }
    }
}

TEST(kernels, avx2_equals_scalar) {
    const KernelTable *v = avx2_kernels();
    if (!v) GTEST_SKIP() << "no AVX2";
    const KernelTable &s = scalar_kernels();
    std::mt19937_64 rng(11);
    for (size_t n = 1; n <= 12; n++) {
        size_t dim = size_t{1} << n;
        auto in = random_state(dim, rng);
        std::vector<PauliAction> acts{{rng() & (dim - 1), rng() & (dim - 1), cplx(0.6, 0.0)},
                                      {rng() & (dim - 1), rng() & (dim - 1), cplx(0.0, 0.8)}};
        std::vector<cplx> o1(dim), o2(dim);
        s.apply_sum(in.data(), o1.data(), dim, acts.data(), 2);
        v->apply_sum(in.data(), o2.data(), dim, acts.data(), 2);
        EXPECT_LT(max_diff(o1, o2), 1e-13);
        uint64_t x = acts[0].x, z = acts[1].z;
        EXPECT_LT(std::abs(s.expectation(in.data(), dim, x, z) - v->expectation(in.data(), dim, x, z)),
                  1e-11 * dim);
        EXPECT_LT(std::abs(s.inner(in.data(), o1.data(), dim) - v->inner(in.data(), o1.data(), dim)), 1e-11 * dim);
        EXPECT_NEAR(s.norm2(in.data(), dim), v->norm2(in.data(), dim), 1e-11 * dim);
    }
}

TEST(kernels, dispatch_reports_a_table) {
    const KernelTable &k = kernels();
    EXPECT_TRUE(std::string(k.name) == "scalar" || std::string(k.name) == "avx2");
}
