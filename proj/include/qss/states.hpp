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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qss/cmatrix.hpp"
#include "qss/linalg.hpp"

namespace qss {

inline constexpr double inv_sqrt2 = 0.70710678118654752440;

/// Normalized state vector.
class PureState {
  public:
    /// Throws ContractError unless the 2-norm is 1 within 1e-12.
    explicit PureState(std::vector<cplx> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    const cplx &operator[](std::size_t i) const { return amplitudes_[i]; }

    /// |psi><psi|.
    CMatrix density() const;

  private:
    std::vector<cplx> amplitudes_;
};

cplx inner(const PureState &a, const PureState &b);

/// Alice's local operation, with the two-bit value it encodes.
enum class Encoding { I = 0b00, X = 0b01, Y = 0b10, Z = 0b11 };

inline constexpr std::array<Encoding, 4> all_encodings{Encoding::I, Encoding::X, Encoding::Y,
                                                      Encoding::Z};

/// "00", "01", "10", "11".
std::string to_bits(Encoding e);
std::optional<Encoding> encoding_from_bits(std::string_view bits);
/// "I", "X", "Y", "Z".
std::string_view to_string(Encoding e);

enum class BellState { phi_plus, phi_minus, psi_plus, psi_minus };

inline constexpr std::array<BellState, 4> all_bell_states{
    BellState::phi_plus, BellState::phi_minus, BellState::psi_plus, BellState::psi_minus};

std::string_view to_string(BellState b);

/// Computational basis state |index> of an n-qubit register; |abc> maps to
/// 4a + 2b + c.
PureState basis_state(std::size_t n_qubits, std::size_t index);

/// (|000> + |111>) / sqrt(2).
PureState ghz3();

/// I, sigma_x, i*sigma_y = [[0,1],[-1,0]], sigma_z.
CMatrix pauli(Encoding e);

/// Plain Pauli matrices (sigma_y without the factor i).
CMatrix sigma_x();
CMatrix sigma_y();
CMatrix sigma_z();

/// Phi+, Phi-, Psi+, Psi- in that order.
std::array<PureState, 4> bell_states();
const PureState &bell_state(BellState b);

/// U rho U^dagger with U = u at factor q. Throws ContractError unless u is
/// unitary within 1e-12.
CMatrix apply_unitary_on_qubit(const CMatrix &rho, const CMatrix &u, QubitIndex q);

bool is_unitary(const CMatrix &u, double tol = 1e-12);

} // namespace qss
