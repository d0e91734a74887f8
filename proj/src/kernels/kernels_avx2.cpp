// Copyright 2026 The qss Authors
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

// AVX2+FMA kernel variants.
// Compiled with: -mavx2 -mfma. Only reached through avx2_table(), which
// checks the CPU first.

#include "qss/kernels.hpp"

#include <immintrin.h>

namespace qss::kernels::detail {

namespace {

// Two complex doubles per register, interleaved (re0, im0, re1, im1).
inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

// (ar + i ai) * b for both complex lanes of b.
inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d b) {
    const __m256d bswap = _mm256_permute_pd(b, 0b0101);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

// Lane-wise complex product a * b.
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0b1111);
    return cmul_broadcast(ar, ai, b);
}

} // namespace

void matmul_avx2(std::span<const cplx> a, std::span<const cplx> b,
                 std::span<cplx> out, std::size_t n) {
    const std::size_t paired = n & ~std::size_t{1};
    for (std::size_t i = 0; i < n; ++i) {
        const cplx *arow = a.data() + i * n;
        cplx *orow = out.data() + i * n;
        for (std::size_t j = 0; j < paired; j += 2) {
            __m256d acc = _mm256_setzero_pd();
            for (std::size_t k = 0; k < n; ++k) {
                const __m256d ar = _mm256_set1_pd(arow[k].real());
                const __m256d ai = _mm256_set1_pd(arow[k].imag());
                acc = _mm256_add_pd(acc, cmul_broadcast(ar, ai, load2(b.data() + k * n + j)));
            }
            store2(orow + j, acc);
        }
        if (paired != n) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                acc += arow[k] * b[k * n + paired];
            }
            orow[paired] = acc;
        }
    }
}

void axpy_avx2(double scale, std::span<const cplx> x, std::span<cplx> y) {
    const std::size_t count = y.size();
    const std::size_t paired = count & ~std::size_t{1};
    const __m256d s = _mm256_set1_pd(scale);
    for (std::size_t i = 0; i < paired; i += 2) {
        store2(y.data() + i, _mm256_fmadd_pd(s, load2(x.data() + i), load2(y.data() + i)));
    }
    for (std::size_t i = paired; i < count; ++i) {
        y[i] += scale * x[i];
    }
}

cplx trace_product_avx2(std::span<const cplx> a, std::span<const cplx> b,
                        std::size_t n) {
    const std::size_t paired = n & ~std::size_t{1};
    __m256d acc = _mm256_setzero_pd();
    cplx tail{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const cplx *arow = a.data() + i * n;
        for (std::size_t k = 0; k < paired; k += 2) {
            // column i of b, rows k and k+1
            const __m256d bcol = _mm256_loadu2_m128d(
                reinterpret_cast<const double *>(b.data() + (k + 1) * n + i),
                reinterpret_cast<const double *>(b.data() + k * n + i));
            acc = _mm256_add_pd(acc, cmul(load2(arow + k), bcol));
        }
        if (paired != n) {
            tail += arow[paired] * b[paired * n + i];
        }
    }
    const __m128d sum = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
    alignas(16) double parts[2];
    _mm_store_pd(parts, sum);
    return cplx{parts[0], parts[1]} + tail;
}

} // namespace qss::kernels::detail
