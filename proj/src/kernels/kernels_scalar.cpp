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

#include "qss/kernels.hpp"

namespace qss::kernels::detail {

void matmul_scalar(std::span<const cplx> a, std::span<const cplx> b,
                   std::span<cplx> out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                acc += a[i * n + k] * b[k * n + j];
            }
            out[i * n + j] = acc;
        }
    }
}

void axpy_scalar(double scale, std::span<const cplx> x, std::span<cplx> y) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += scale * x[i];
    }
}

cplx trace_product_scalar(std::span<const cplx> a, std::span<const cplx> b,
                          std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            acc += a[i * n + k] * b[k * n + i];
        }
    }
    return acc;
}

} // namespace qss::kernels::detail
