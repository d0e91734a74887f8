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

#include "qss/states.hpp"

#include <cmath>
#include <numbers>

#include "qss/errors.hpp"

namespace qss {

PureState::PureState(std::vector<cplx> amplitudes) : amplitudes_(std::move(amplitudes)) {
    double norm2 = 0.0;
    for (const cplx &a : amplitudes_) {
        norm2 += std::norm(a);
    }
    if (amplitudes_.empty() || std::abs(norm2 - 1.0) > 1e-12) {
        throw ContractError("state vector is not normalized (norm^2 = " + std::to_string(norm2) +
                            ")");
    }
}

CMatrix PureState::density() const { return CMatrix::outer(amplitudes_); }

cplx inner(const PureState &a, const PureState &b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("inner product of states with different dimensions");
    }
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

std::string to_bits(Encoding e) {
    const int v = static_cast<int>(e);
    return {static_cast<char>('0' + ((v >> 1) & 1)), static_cast<char>('0' + (v & 1))};
}

std::optional<Encoding> encoding_from_bits(std::string_view bits) {
    if (bits == "00") return Encoding::I;
    if (bits == "01") return Encoding::X;
    if (bits == "10") return Encoding::Y;
    if (bits == "11") return Encoding::Z;
    return std::nullopt;
}

std::string_view to_string(Encoding e) {
    switch (e) {
    case Encoding::I: return "I";
    case Encoding::X: return "X";
    case Encoding::Y: return "Y";
    case Encoding::Z: return "Z";
    }
    return "?";
}

std::string_view to_string(BellState b) {
    switch (b) {
    case BellState::phi_plus: return "Phi+";
    case BellState::phi_minus: return "Phi-";
    case BellState::psi_plus: return "Psi+";
    case BellState::psi_minus: return "Psi-";
    }
    return "?";
}

PureState basis_state(std::size_t n_qubits, std::size_t index) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw ShapeError("basis index out of range");
    }
    std::vector<cplx> amps(dim, 0.0);
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

PureState ghz3() {
    std::vector<cplx> amps(8, 0.0);
    amps[0b000] = inv_sqrt2;
    amps[0b111] = inv_sqrt2;
    return PureState(std::move(amps));
}

CMatrix sigma_x() { return CMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix sigma_y() { return CMatrix(2, {0.0, cplx{0.0, -1.0}, cplx{0.0, 1.0}, 0.0}); }
CMatrix sigma_z() { return CMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

CMatrix pauli(Encoding e) {
    switch (e) {
    case Encoding::I: return CMatrix::identity(2);
    case Encoding::X: return sigma_x();
    case Encoding::Y: return CMatrix(2, {0.0, 1.0, -1.0, 0.0});
    case Encoding::Z: return sigma_z();
    }
    throw ContractError("unknown encoding");
}

std::array<PureState, 4> bell_states() {
    const double h = inv_sqrt2;
    return {PureState({h, 0.0, 0.0, h}), PureState({h, 0.0, 0.0, -h}),
            PureState({0.0, h, h, 0.0}), PureState({0.0, h, -h, 0.0})};
}

const PureState &bell_state(BellState b) {
    static const std::array<PureState, 4> states = bell_states();
    return states[static_cast<std::size_t>(b)];
}

bool is_unitary(const CMatrix &u, double tol) {
    return max_abs_diff(u * u.adjoint(), CMatrix::identity(u.dim())) <= tol;
}

CMatrix apply_unitary_on_qubit(const CMatrix &rho, const CMatrix &u, QubitIndex q) {
    if (u.dim() != 2 || !is_unitary(u)) {
        throw ContractError("operator applied to a qubit must be a 2x2 unitary");
    }
    return conjugate(embed(u, q, qubit_count(rho.dim())), rho);
}

} // namespace qss
