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
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qss/cmatrix.hpp"
#include "qss/linalg.hpp"
#include "qss/random.hpp"

namespace qss {

enum class ChannelName {
    phase_damping,
    phase_flip,
    bit_flip,
    bit_phase_flip,
    depolarizing,
    amplitude_damping,
};

inline constexpr std::array<ChannelName, 6> channel_catalogue{
    ChannelName::phase_damping, ChannelName::phase_flip,   ChannelName::bit_flip,
    ChannelName::bit_phase_flip, ChannelName::depolarizing, ChannelName::amplitude_damping};

std::string_view to_string(ChannelName name);
std::optional<ChannelName> channel_from_string(std::string_view name);

/// Single-qubit channel rho -> sum_i E_i rho E_i^dagger.
struct KrausChannel {
    ChannelName name;
    /// Damping probability / strength, in [0, 1].
    double parameter;
    std::vector<CMatrix> operators;
};

/// || sum_i E_i^dagger E_i - I ||_max.
double completeness_defect(const KrausChannel &ch);
bool is_cptp(const KrausChannel &ch, double tol = 1e-12);

/// {sqrt(1-p) I, sqrt(p) |0><0|, sqrt(p) |1><1|}.
KrausChannel phase_damping(double p);

/// Catalogue channel with its textbook Kraus set. Throws DomainError for a
/// parameter outside [0, 1].
KrausChannel standard_channel(ChannelName name, double parameter);
/// Throws CatalogueError for an unknown name.
KrausChannel standard_channel(std::string_view name, double parameter);

/// Channel acting on factor q of a qubit register. Throws ContractError if
/// the Kraus set is not complete within 1e-12.
CMatrix apply_channel(const CMatrix &rho, const KrausChannel &ch, QubitIndex q);

/// Kraus set embedded at one factor of an n-qubit register, with the
/// effects E^dagger E precomputed. Validated for completeness on creation.
struct LocalChannel {
    LocalChannel(const KrausChannel &ch, QubitIndex q, std::size_t n_qubits);

    KrausChannel channel;
    QubitIndex qubit;
    std::size_t n_qubits;
    std::vector<CMatrix> operators;
    std::vector<CMatrix> effects;
};

CMatrix apply_channel(const CMatrix &rho, const LocalChannel &local);

struct KrausBranch {
    std::size_t index;
    double probability;
    /// Normalized post-branch state.
    CMatrix state;
};

/// One trajectory step: branch i with probability Tr(E_i rho E_i^dagger).
/// Throws DegenerateError when every branch weight is below 1e-15.
KrausBranch sample_kraus_branch(const CMatrix &rho, const KrausChannel &ch, QubitIndex q,
                                Rng &rng);

KrausBranch sample_kraus_branch(const CMatrix &rho, const LocalChannel &local, Rng &rng);

/// Unnormalized branch weights Tr(E_i rho E_i^dagger), clamped at 0.
std::vector<double> kraus_branch_weights(const CMatrix &rho, const KrausChannel &ch,
                                         QubitIndex q);
std::vector<double> kraus_branch_weights(const CMatrix &rho, const LocalChannel &local);

struct ChannelStructureReport {
    ChannelName name;
    bool all_kraus_diagonal;
    /// GHZ sent through the channel on all three legs stays supported on
    /// {|000>, |111>} with a real |000><111| coherence.
    bool ghz_form_preserved;
    /// |<000| rho |111>| / (1/2), in [0, 1].
    double coherence_factor;
};

ChannelStructureReport classify_channel_structure(const KrausChannel &ch);

nlohmann::json to_json(const KrausChannel &ch);
nlohmann::json to_json(const ChannelStructureReport &report);

} // namespace qss
