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

#include <bit>
#include <cstdlib>
#include <cstring>
#include <string>

namespace love {

namespace {

inline double parity_sign(uint64_t v) { return (std::popcount(v) & 1) ? -1.0 : 1.0; }

void apply_sum_scalar(const cplx *in, cplx *out, size_t dim, const PauliAction *acts, size_t n_acts) {
    for (size_t c = 0; c < dim; c++) out[c] = 0;
    for (size_t k = 0; k < n_acts; k++) {
        const PauliAction &a = acts[k];
        for (size_t c = 0; c < dim; c++) {
            size_t src = c ^ a.x;
            out[c] += a.coef * parity_sign(a.z & src) * in[src];
        }
    }
}

cplx expectation_scalar(const cplx *psi, size_t dim, uint64_t x, uint64_t z) {
    cplx acc = 0;
    for (size_t b = 0; b < dim; b++) acc += std::conj(psi[b ^ x]) * parity_sign(z & b) * psi[b];
    return acc;
}

cplx inner_scalar(const cplx *a, const cplx *b, size_t dim) {
    cplx acc = 0;
    for (size_t k = 0; k < dim; k++) acc += std::conj(a[k]) * b[k];
    return acc;
}

double norm2_scalar(const cplx *a, size_t dim) {
    double acc = 0;
    for (size_t k = 0; k < dim; k++) acc += std::norm(a[k]);
    return acc;
}

void rank1_update_scalar(cplx *rho, const cplx *psi, size_t dim, double w) {
    for (size_t i = 0; i < dim; i++) {
        cplx pi = w * psi[i];
        cplx *row = rho + i * dim;
        for (size_t j = 0; j < dim; j++) row[j] += pi * std::conj(psi[j]);
    }
}

const KernelTable kScalar = {"scalar", apply_sum_scalar, expectation_scalar, inner_scalar, norm2_scalar,
                             rank1_update_scalar};

const KernelTable &select_kernels() {
    const char *env = std::getenv("LOVE_SIMD");
    if (env && std::string(env) == "scalar") return kScalar;
    if (const KernelTable *t = avx2_kernels()) return *t;
    return kScalar;
}

}  // namespace

const KernelTable &scalar_kernels() { return kScalar; }

const KernelTable &kernels() {
    static const KernelTable &table = select_kernels();
    return table;
}

cplx trace_pauli(const cplx *rho, size_t dim, uint64_t x, uint64_t z) {
    cplx acc = 0;
    for (size_t b = 0; b < dim; b++) acc += parity_sign(z & b) * rho[b * dim + (b ^ x)];
    return acc;
}

}  // namespace love
