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

#include "qss/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qss/errors.hpp"

namespace qss {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0) {
        throw ShapeError("matrix dimension must be positive");
    }
    if (dim > CMatrix::max_dim) {
        throw SizeError("matrix dimension " + std::to_string(dim) + " exceeds maximum " +
                        std::to_string(CMatrix::max_dim));
    }
}

void check_same(const CMatrix &a, const CMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
    }
}

} // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim) {
    check_dim(dim);
    data_.assign(dim * dim, cplx{0.0, 0.0});
}

CMatrix::CMatrix(std::size_t dim, std::initializer_list<cplx> entries)
    : CMatrix(dim, std::vector<cplx>(entries)) {}

CMatrix::CMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
    check_dim(dim);
    if (data_.size() != dim * dim) {
        throw ShapeError("expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(data_.size()));
    }
    if (!is_finite()) {
        throw ContractError("matrix entries must be finite");
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> diag) {
    CMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

CMatrix CMatrix::outer(std::span<const cplx> v) { return outer(v, v); }

CMatrix CMatrix::outer(std::span<const cplx> u, std::span<const cplx> v) {
    if (u.size() != v.size()) {
        throw ShapeError("outer product of vectors with different lengths");
    }
    CMatrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = u[i] * std::conj(v[j]);
        }
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

cplx CMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

bool CMatrix::is_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const cplx &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

CMatrix &CMatrix::operator+=(const CMatrix &rhs) {
    check_same(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &rhs) {
    check_same(*this, rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(cplx scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

CMatrix &CMatrix::add_scaled(double scale, const CMatrix &rhs, const kernels::KernelTable &k) {
    check_same(*this, rhs);
    k.axpy(scale, rhs.data_, data_);
    return *this;
}

CMatrix operator+(CMatrix lhs, const CMatrix &rhs) { return lhs += rhs; }
CMatrix operator-(CMatrix lhs, const CMatrix &rhs) { return lhs -= rhs; }
CMatrix operator*(cplx scale, CMatrix m) { return m *= scale; }

CMatrix multiply(const CMatrix &a, const CMatrix &b, const kernels::KernelTable &k) {
    check_same(a, b);
    CMatrix out(a.dim());
    k.matmul(a.data(), b.data(), out.data(), a.dim());
    return out;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    return multiply(a, b, kernels::active());
}

CMatrix conjugate(const CMatrix &u, const CMatrix &m, const kernels::KernelTable &k) {
    return multiply(multiply(u, m, k), u.adjoint(), k);
}

cplx trace_product(const CMatrix &a, const CMatrix &b, const kernels::KernelTable &k) {
    check_same(a, b);
    return k.trace_product(a.data(), b.data(), a.dim());
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    check_same(a, b);
    double worst = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        worst = std::max(worst, std::abs(da[i] - db[i]));
    }
    return worst;
}

} // namespace qss
