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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qss/kernels.hpp"

namespace qss {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for registers of at most
/// four qubits.
class CMatrix {
  public:
    static constexpr std::size_t max_dim = 16;

    /// dim x dim zero matrix.
    explicit CMatrix(std::size_t dim);

    /// Row-major entries; entries.size() must equal dim * dim.
    CMatrix(std::size_t dim, std::initializer_list<cplx> entries);
    CMatrix(std::size_t dim, std::vector<cplx> entries);

    static CMatrix identity(std::size_t dim);
    static CMatrix diagonal(std::span<const double> diag);
    /// |v><v| for a column vector v.
    static CMatrix outer(std::span<const cplx> v);
    /// |u><v|.
    static CMatrix outer(std::span<const cplx> u, std::span<const cplx> v);

    std::size_t dim() const { return dim_; }

    cplx &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const cplx &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    std::span<cplx> data() { return data_; }
    std::span<const cplx> data() const { return data_; }

    CMatrix adjoint() const;
    cplx trace() const;
    bool is_finite() const;

    CMatrix &operator+=(const CMatrix &rhs);
    CMatrix &operator-=(const CMatrix &rhs);
    CMatrix &operator*=(cplx scale);

    /// this += scale * rhs.
    CMatrix &add_scaled(double scale, const CMatrix &rhs,
                        const kernels::KernelTable &k = kernels::active());

    friend bool operator==(const CMatrix &, const CMatrix &) = default;

  private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

CMatrix operator+(CMatrix lhs, const CMatrix &rhs);
CMatrix operator-(CMatrix lhs, const CMatrix &rhs);
CMatrix operator*(cplx scale, CMatrix m);
CMatrix operator*(const CMatrix &a, const CMatrix &b);

CMatrix multiply(const CMatrix &a, const CMatrix &b, const kernels::KernelTable &k);

/// u * m * u^dagger.
CMatrix conjugate(const CMatrix &u, const CMatrix &m,
                  const kernels::KernelTable &k = kernels::active());

/// Tr(a * b).
cplx trace_product(const CMatrix &a, const CMatrix &b,
                   const kernels::KernelTable &k = kernels::active());

/// Largest entrywise modulus of a - b.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

} // namespace qss
