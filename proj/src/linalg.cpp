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

#include "qss/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "qss/errors.hpp"

namespace qss {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix &m) {
    Eigen::MatrixXcd out(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
        }
    }
    return out;
}

} // namespace

std::size_t qubit_count(std::size_t dim) {
    std::size_t n = 0;
    std::size_t d = 1;
    while (d < dim) {
        d <<= 1;
        ++n;
    }
    if (d != dim) {
        throw ShapeError("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return n;
}

CMatrix tensor(const CMatrix &a, const CMatrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da * db > CMatrix::max_dim) {
        throw SizeError("tensor product dimension " + std::to_string(da * db) +
                        " exceeds maximum " + std::to_string(CMatrix::max_dim));
    }
    CMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    out(i * db + k, j * db + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

CMatrix partial_trace(const CMatrix &rho, std::span<const std::size_t> register_dims,
                      std::span<const QubitIndex> keep) {
    const std::size_t n = register_dims.size();
    const std::size_t total =
        std::accumulate(register_dims.begin(), register_dims.end(), std::size_t{1},
                        std::multiplies<>{});
    if (n == 0 || total != rho.dim()) {
        throw ShapeError("register dimensions do not multiply to matrix dimension " +
                         std::to_string(rho.dim()));
    }
    if (keep.empty()) {
        throw ShapeError("partial trace needs at least one kept factor");
    }
    std::vector<bool> kept(n, false);
    for (QubitIndex q : keep) {
        if (q.value() >= n) {
            throw ShapeError("factor index " + std::to_string(q.value()) + " out of range");
        }
        kept[q.value()] = true;
    }

    // Row-major strides of each factor in the full index.
    std::vector<std::size_t> stride(n);
    std::size_t s = 1;
    for (std::size_t f = n; f-- > 0;) {
        stride[f] = s;
        s *= register_dims[f];
    }

    std::vector<std::size_t> kept_factors;
    std::vector<std::size_t> traced_factors;
    for (std::size_t f = 0; f < n; ++f) {
        (kept[f] ? kept_factors : traced_factors).push_back(f);
    }

    // Offsets into the full index contributed by each kept / traced multi-index.
    auto offsets = [&](const std::vector<std::size_t> &factors) {
        std::vector<std::size_t> out{0};
        for (std::size_t f : factors) {
            std::vector<std::size_t> next;
            next.reserve(out.size() * register_dims[f]);
            for (std::size_t base : out) {
                for (std::size_t v = 0; v < register_dims[f]; ++v) {
                    next.push_back(base + v * stride[f]);
                }
            }
            out = std::move(next);
        }
        return out;
    };
    const std::vector<std::size_t> kept_off = offsets(kept_factors);
    const std::vector<std::size_t> traced_off = offsets(traced_factors);

    CMatrix out(kept_off.size());
    for (std::size_t r = 0; r < kept_off.size(); ++r) {
        for (std::size_t c = 0; c < kept_off.size(); ++c) {
            cplx acc{0.0, 0.0};
            for (std::size_t t : traced_off) {
                acc += rho(kept_off[r] + t, kept_off[c] + t);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

CMatrix partial_trace(const CMatrix &rho, std::span<const QubitIndex> keep) {
    const std::vector<std::size_t> dims(qubit_count(rho.dim()), 2);
    return partial_trace(rho, dims, keep);
}

CMatrix embed(const CMatrix &op, QubitIndex q, std::size_t n_qubits) {
    if (op.dim() != 2) {
        throw ShapeError("embedded operator must be 2x2");
    }
    if (q.value() >= n_qubits) {
        throw ShapeError("qubit index " + std::to_string(q.value()) + " out of range for " +
                         std::to_string(n_qubits) + " qubits");
    }
    CMatrix out = q.value() == 0 ? op : CMatrix::identity(2);
    for (std::size_t f = 1; f < n_qubits; ++f) {
        out = tensor(out, f == q.value() ? op : CMatrix::identity(2));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

HermitianEigen hermitian_eigen(const CMatrix &h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h));
    HermitianEigen out;
    const auto n = static_cast<Eigen::Index>(h.dim());
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values.push_back(solver.eigenvalues()(k));
        std::vector<cplx> v(h.dim());
        for (Eigen::Index i = 0; i < n; ++i) {
            v[static_cast<std::size_t>(i)] = solver.eigenvectors()(i, k);
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

double trace_norm(const CMatrix &a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a));
    return svd.singularValues().sum();
}

double hermiticity_defect(const CMatrix &a) { return max_abs_diff(a, a.adjoint()); }

DensityCheck assert_density_matrix(const CMatrix &rho, double tol) {
    DensityCheck check;
    check.hermitian = hermiticity_defect(rho) <= tol;
    const cplx tr = rho.trace();
    check.unit_trace = std::abs(tr - 1.0) <= tol;

    // Eigenvalues of the Hermitian part; a non-Hermitian input already fails.
    const CMatrix herm = 0.5 * (rho + rho.adjoint());
    const auto ev = hermitian_eigenvalues(herm);
    check.min_eigenvalue = ev.front();
    check.positive = check.min_eigenvalue >= -tol;

    auto note = [&](const std::string &msg) {
        if (!check.diagnostic.empty()) {
            check.diagnostic += "; ";
        }
        check.diagnostic += msg;
    };
    if (!check.hermitian) {
        note("not Hermitian");
    }
    if (!check.unit_trace) {
        note("trace " + std::to_string(tr.real()) + " != 1");
    }
    if (!check.positive) {
        note("negative eigenvalue " + std::to_string(check.min_eigenvalue));
    }
    return check;
}

} // namespace qss
