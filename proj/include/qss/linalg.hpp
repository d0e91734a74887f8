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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qss/cmatrix.hpp"

namespace qss {

/// Tensor-factor position in a register. Index 0 is the leftmost ket label.
class QubitIndex {
  public:
    constexpr explicit QubitIndex(std::size_t index) : index_(index) {}
    constexpr std::size_t value() const { return index_; }
    friend constexpr auto operator<=>(QubitIndex, QubitIndex) = default;

  private:
    std::size_t index_;
};

/// Number of qubits n with dim == 2^n; throws ShapeError otherwise.
std::size_t qubit_count(std::size_t dim);

/// Kronecker product a (x) b.
CMatrix tensor(const CMatrix &a, const CMatrix &b);

/// Reduced matrix over the kept factors (ascending factor order).
CMatrix partial_trace(const CMatrix &rho, std::span<const std::size_t> register_dims,
                      std::span<const QubitIndex> keep);

/// Convenience overload for a register of qubits.
CMatrix partial_trace(const CMatrix &rho, std::span<const QubitIndex> keep);

/// I (x) ... (x) op (x) ... (x) I with the 2x2 op at factor q of an
/// n-qubit register.
CMatrix embed(const CMatrix &op, QubitIndex q, std::size_t n_qubits);

/// Eigenvalues of a Hermitian matrix, ascending. Only the lower triangle
/// is read.
std::vector<double> hermitian_eigenvalues(const CMatrix &h);

struct HermitianEigen {
    std::vector<double> values;
    /// Column k (as a vector) is the eigenvector for values[k].
    std::vector<std::vector<cplx>> vectors;
};

HermitianEigen hermitian_eigen(const CMatrix &h);

/// Sum of singular values.
double trace_norm(const CMatrix &a);

double hermiticity_defect(const CMatrix &a);

struct DensityCheck {
    bool hermitian = false;
    bool unit_trace = false;
    bool positive = false;
    double min_eigenvalue = 0.0;
    /// Empty when all checks pass, otherwise names the failing properties.
    std::string diagnostic;

    explicit operator bool() const { return hermitian && unit_trace && positive; }
};

/// Hermitian, unit trace and PSD, each within tol.
DensityCheck assert_density_matrix(const CMatrix &rho, double tol = 1e-10);

} // namespace qss
