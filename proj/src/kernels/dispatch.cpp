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

namespace qss::kernels {

std::string_view to_string(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return "scalar";
    case Isa::avx2:
        return "avx2";
    }
    return "unknown";
}

bool cpu_supports(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    }
    return false;
}

const KernelTable &scalar_table() {
    static const KernelTable table{Isa::scalar, &detail::matmul_scalar,
                                   &detail::axpy_scalar,
                                   &detail::trace_product_scalar};
    return table;
}

const KernelTable *avx2_table() {
#if defined(QSS_HAVE_AVX2_KERNELS)
    static const KernelTable table{Isa::avx2, &detail::matmul_avx2,
                                   &detail::axpy_avx2,
                                   &detail::trace_product_avx2};
    static const bool usable = cpu_supports(Isa::avx2);
    return usable ? &table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable &active() {
    static const KernelTable &chosen = []() -> const KernelTable & {
        if (const KernelTable *wide = avx2_table()) {
            return *wide;
        }
        return scalar_table();
    }();
    return chosen;
}

std::vector<const KernelTable *> available() {
    std::vector<const KernelTable *> out{&scalar_table()};
    if (const KernelTable *wide = avx2_table()) {
        out.push_back(wide);
    }
    return out;
}

} // namespace qss::kernels
