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

#ifndef LOVE_KERNELS_H
#define LOVE_KERNELS_H

#include <complex>
#include <cstddef>
#include <cstdint>

namespace love {

using cplx = std::complex<double>;

/// coef * X^x Z^z acting on a state with basis bit q = logical qubit q.
struct PauliAction {
    uint64_t x = 0, z = 0;
    cplx coef = 1.0;
};

/// Dense state-vector kernels. All sizes are in complex amplitudes.
struct KernelTable {
    const char *name;
    /// out = sum_k acts[k] in. `out` must not alias `in`.
    void (*apply_sum)(const cplx *in, cplx *out, size_t dim, const PauliAction *acts, size_t n_acts);
    /// <psi| X^x Z^z |psi>.
    cplx (*expectation)(const cplx *psi, size_t dim, uint64_t x, uint64_t z);
    /// <a|b>.
    cplx (*inner)(const cplx *a, const cplx *b, size_t dim);
    double (*norm2)(const cplx *a, size_t dim);
    /// rho += w |psi><psi|, rho row-major dim x dim.
    void (*rank1_update)(cplx *rho, const cplx *psi, size_t dim, double w);
};

const KernelTable &scalar_kernels();
/// nullptr when the CPU or the build lacks AVX2.
const KernelTable *avx2_kernels();
/// AVX2 when available unless LOVE_SIMD=scalar.
const KernelTable &kernels();

/// tr(rho X^x Z^z) for a row-major matrix.
cplx trace_pauli(const cplx *rho, size_t dim, uint64_t x, uint64_t z);

}  // namespace love

#endif
