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

/**
 * @file
 * Inner-loop kernels for dense row-major complex matrices.
 *
 * Every kernel has a portable scalar reference implementation. Wider
 * variants (currently AVX2+FMA on x86-64) are compiled into separate
 * translation units with their own target flags and are only handed out
 * when the running CPU reports support for them, so the library itself
 * stays baseline-ISA.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qss::kernels {

using cplx = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
    Isa isa;

    /// out = a * b for n x n row-major matrices. out must not alias a or b.
    void (*matmul)(std::span<const cplx> a, std::span<const cplx> b,
                   std::span<cplx> out, std::size_t n);

    /// y += scale * x, elementwise.
    void (*axpy)(double scale, std::span<const cplx> x, std::span<cplx> y);

    /// Tr(a * b) for n x n row-major matrices, without forming the product.
    cplx (*trace_product)(std::span<const cplx> a, std::span<const cplx> b,
                          std::size_t n);
};

const KernelTable &scalar_table();

/// AVX2 table, or nullptr when it was not built or the CPU lacks AVX2/FMA.
const KernelTable *avx2_table();

/// Widest table usable on this machine. Resolved once; never changes.
const KernelTable &active();

/// Tables usable on this machine, scalar first.
std::vector<const KernelTable *> available();

bool cpu_supports(Isa isa);

namespace detail {
void matmul_scalar(std::span<const cplx> a, std::span<const cplx> b,
                   std::span<cplx> out, std::size_t n);
void axpy_scalar(double scale, std::span<const cplx> x, std::span<cplx> y);
cplx trace_product_scalar(std::span<const cplx> a, std::span<const cplx> b,
                          std::size_t n);

#if defined(QSS_HAVE_AVX2_KERNELS)
void matmul_avx2(std::span<const cplx> a, std::span<const cplx> b,
                 std::span<cplx> out, std::size_t n);
void axpy_avx2(double scale, std::span<const cplx> x, std::span<cplx> y);
cplx trace_product_avx2(std::span<const cplx> a, std::span<const cplx> b,
                        std::size_t n);
#endif
} // namespace detail

} // namespace qss::kernels
