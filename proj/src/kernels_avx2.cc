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

#include <bit>

#include "love/kernels.h"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define LOVE_HAVE_AVX2_BUILD 1
#endif

namespace love {

#ifdef LOVE_HAVE_AVX2_BUILD

namespace {

#define LOVE_AVX2 __attribute__((target("avx2,fma")))

// Two complex numbers per register: [re0, im0, re1, im1].

LOVE_AVX2 inline __m256d cmul(__m256d a, __m256d b) {
    __m256d br = _mm256_movedup_pd(b);
    __m256d bi = _mm256_permute_pd(b, 0xF);
    __m256d a_sw = _mm256_permute_pd(a, 0x5);
    return _mm256_addsub_pd(_mm256_mul_pd(a, br), _mm256_mul_pd(a_sw, bi));
}

/// conj(a) * b per complex lane.
LOVE_AVX2 inline __m256d cmul_conj(__m256d a, __m256d b) {
    const __m256d flip = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    return cmul(_mm256_xor_pd(a, flip), b);
}

LOVE_AVX2 inline __m256d sign_mask(bool s0, bool s1) {
    return _mm256_castsi256_pd(_mm256_set_epi64x(s1 ? INT64_MIN : 0, s1 ? INT64_MIN : 0, s0 ? INT64_MIN : 0,
                                                 s0 ? INT64_MIN : 0));
}

LOVE_AVX2 inline cplx hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v), hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    double out[2];
    _mm_storeu_pd(out, s);
    return {out[0], out[1]};
}

LOVE_AVX2 void apply_sum_avx2(const cplx *in, cplx *out, size_t dim, const PauliAction *acts, size_t n_acts) {
    if (dim < 2) {
        scalar_kernels().apply_sum(in, out, dim, acts, n_acts);
        return;
    }
    const double *src = reinterpret_cast<const double *>(in);
    double *dst = reinterpret_cast<double *>(out);
    const __m256d zero = _mm256_setzero_pd();
    for (size_t c = 0; c < dim; c += 2) _mm256_storeu_pd(dst + 2 * c, zero);
    for (size_t k = 0; k < n_acts; k++) {
        const PauliAction &a = acts[k];
        const __m256d coef = _mm256_set_pd(a.coef.imag(), a.coef.real(), a.coef.imag(), a.coef.real());
        const bool swap = a.x & 1;
        const bool z0 = a.z & 1;
        for (size_t c = 0; c < dim; c += 2) {
            size_t base = (c ^ a.x) & ~size_t{1};
            __m256d v = _mm256_loadu_pd(src + 2 * base);
            if (swap) v = _mm256_permute2f128_pd(v, v, 0x01);
            bool s0 = std::popcount(a.z & (c ^ a.x)) & 1;
            __m256d t = _mm256_xor_pd(cmul(v, coef), sign_mask(s0, s0 ^ z0));
            _mm256_storeu_pd(dst + 2 * c, _mm256_add_pd(_mm256_loadu_pd(dst + 2 * c), t));
        }
    }
}

LOVE_AVX2 cplx expectation_avx2(const cplx *psi, size_t dim, uint64_t x, uint64_t z) {
    if (dim < 2) return scalar_kernels().expectation(psi, dim, x, z);
    const double *p = reinterpret_cast<const double *>(psi);
    __m256d acc = _mm256_setzero_pd();
    const bool swap = x & 1;
    const bool z0 = z & 1;
    for (size_t b = 0; b < dim; b += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * b);
        __m256d w = _mm256_loadu_pd(p + 2 * ((b ^ x) & ~size_t{1}));
        if (swap) w = _mm256_permute2f128_pd(w, w, 0x01);
        bool s0 = std::popcount(z & b) & 1;
        acc = _mm256_add_pd(acc, _mm256_xor_pd(cmul_conj(w, v), sign_mask(s0, s0 ^ z0)));
    }
    return hsum(acc);
}

LOVE_AVX2 cplx inner_avx2(const cplx *a, const cplx *b, size_t dim) {
    const double *pa = reinterpret_cast<const double *>(a);
    const double *pb = reinterpret_cast<const double *>(b);
    __m256d acc = _mm256_setzero_pd();
    size_t k = 0;
    for (; k + 2 <= dim; k += 2) acc = _mm256_add_pd(acc, cmul_conj(_mm256_loadu_pd(pa + 2 * k), _mm256_loadu_pd(pb + 2 * k)));
    cplx r = hsum(acc);
    for (; k < dim; k++) r += std::conj(a[k]) * b[k];
    return r;
}

LOVE_AVX2 double norm2_avx2(const cplx *a, size_t dim) {
    const double *p = reinterpret_cast<const double *>(a);
    __m256d acc = _mm256_setzero_pd();
    size_t k = 0;
    for (; k + 2 <= dim; k += 2) {
        __m256d v = _mm256_loadu_pd(p + 2 * k);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double buf[4];
    _mm256_storeu_pd(buf, acc);
    double r = (buf[0] + buf[2]) + (buf[1] + buf[3]);
    for (; k < dim; k++) r += std::norm(a[k]);
    return r;
}

LOVE_AVX2 void rank1_update_avx2(cplx *rho, const cplx *psi, size_t dim, double w) {
    if (dim < 2) {
        scalar_kernels().rank1_update(rho, psi, dim, w);
        return;
    }
    const double *p = reinterpret_cast<const double *>(psi);
    const __m256d flip = _mm256_set_pd(-0.0, 0.0, -0.0, 0.0);
    for (size_t i = 0; i < dim; i++) {
        cplx pi = w * psi[i];
        const __m256d coef = _mm256_set_pd(pi.imag(), pi.real(), pi.imag(), pi.real());
        double *row = reinterpret_cast<double *>(rho + i * dim);
        for (size_t j = 0; j < dim; j += 2) {
            __m256d v = _mm256_xor_pd(_mm256_loadu_pd(p + 2 * j), flip);
            _mm256_storeu_pd(row + 2 * j, _mm256_add_pd(_mm256_loadu_pd(row + 2 * j), cmul(v, coef)));
        }
    }
}

const KernelTable kAvx2 = {"avx2", apply_sum_avx2, expectation_avx2, inner_avx2, norm2_avx2, rank1_update_avx2};

}  // namespace

const KernelTable *avx2_kernels() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma") ? &kAvx2 : nullptr;
}

#else

const KernelTable *avx2_kernels() { return nullptr; }

#endif

}  // namespace love
