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
#include <vector>

#include "qss/cmatrix.hpp"
#include "qss/linalg.hpp"
#include "qss/random.hpp"
#include "qss/states.hpp"

namespace qss {

/// Orthonormal single-qubit basis {first, second}.
struct QubitBasis {
    PureState first;
    PureState second;
};

QubitBasis computational_basis();

/// Charlie's basis {|+> = a|0> + b|1>, |-> = b|0> - a|1>} with
/// b = sqrt(1 - a^2). Both coefficients real and strictly positive.
class MeasurementBasis {
  public:
    /// Throws DomainError unless alpha is in the open interval (0, 1).
    explicit MeasurementBasis(double alpha);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    PureState plus() const;
    PureState minus() const;
    QubitBasis vectors() const { return {plus(), minus()}; }

  private:
    double alpha_;
    double beta_;
};

MeasurementBasis charlie_basis(double alpha);

/// Positive operators summing to `support`. For an ordinary POVM support is
/// the identity; for a measurement that is only ever run after a projection
/// onto a subspace it is that subspace's projector.
struct Povm {
    std::vector<CMatrix> elements;
    CMatrix support;
};

Povm make_povm(std::vector<CMatrix> elements);

struct MeasurementOutcome {
    std::size_t outcome_index;
    double probability;
    /// Normalized state after the outcome; empty when the outcome has
    /// probability below 1e-15.
    std::optional<CMatrix> post_state;
};

/// Measure factor q in `basis`; post states are reduced to the remaining
/// factors.
std::array<MeasurementOutcome, 2> measure_qubit(const CMatrix &rho, const QubitBasis &basis,
                                                QubitIndex q);
std::array<MeasurementOutcome, 2> measure_qubit(const CMatrix &rho,
                                                const MeasurementBasis &basis, QubitIndex q);

/// Post-measurement state of factor q for a single outcome. Throws
/// DegenerateError if that outcome has probability below 1e-15.
CMatrix collapse_qubit(const CMatrix &rho, const PureState &outcome, QubitIndex q);

/// Draws one outcome of measure_qubit.
MeasurementOutcome sample_measure_qubit(const CMatrix &rho, const QubitBasis &basis,
                                        QubitIndex q, Rng &rng);

/// Outcomes over the Bell basis in the order Phi+, Phi-, Psi+, Psi-.
std::array<MeasurementOutcome, 4> bell_measure(const CMatrix &rho2);

enum class ParitySubspace { even, odd };

/// P1 = |00><00| + |11><11|, P2 = |01><01| + |10><10|.
Povm parity_projectors();

/// Pi1 = 1/2 [[1, 1], [1, 1]], Pi2 = 1/2 [[1, -1], [-1, 1]] written in the
/// ordered basis {|00>, |11>} (even) or {|01>, |10>} (odd), zero on the
/// complement. Support is the corresponding parity projector.
Povm bell_block_povm(ParitySubspace subspace);

struct HelstromResult {
    /// {element for a, element for b}.
    Povm povm;
    double min_error;
};

/// Minimum-error discrimination of rho_a (prior prior_a) from rho_b.
HelstromResult helstrom(const CMatrix &rho_a, const CMatrix &rho_b, double prior_a);

/// Outcome probabilities Tr(Pi_i rho). Throws ContractError if the POVM is
/// incomplete on its support or rho has weight outside the support.
std::vector<double> apply_povm(const CMatrix &rho, const Povm &povm);

/// Draws one outcome index of apply_povm.
std::size_t sample_povm(const CMatrix &rho, const Povm &povm, Rng &rng);

/// P rho P / Tr(P rho) for a projector P. Throws DegenerateError when the
/// weight is below 1e-15.
CMatrix project(const CMatrix &rho, const CMatrix &projector);

} // namespace qss
