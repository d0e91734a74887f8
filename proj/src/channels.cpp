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

#include "qss/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qss/errors.hpp"
#include "qss/states.hpp"

namespace qss {

namespace {

constexpr double branch_floor = 1e-15;
constexpr double structure_tol = 1e-10;

void check_parameter(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("channel parameter " + std::to_string(p) + " outside [0, 1]");
    }
}

void require_cptp(const KrausChannel &ch) {
    if (!is_cptp(ch)) {
        throw ContractError(std::string(to_string(ch.name)) +
                            ": Kraus operators are not trace preserving (defect " +
                            std::to_string(completeness_defect(ch)) + ")");
    }
}

nlohmann::json matrix_to_json(const CMatrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string_view to_string(ChannelName name) {
    switch (name) {
    case ChannelName::phase_damping: return "phase_damping";
    case ChannelName::phase_flip: return "phase_flip";
    case ChannelName::bit_flip: return "bit_flip";
    case ChannelName::bit_phase_flip: return "bit_phase_flip";
    case ChannelName::depolarizing: return "depolarizing";
    case ChannelName::amplitude_damping: return "amplitude_damping";
    }
    return "unknown";
}

std::optional<ChannelName> channel_from_string(std::string_view name) {
    for (ChannelName c : channel_catalogue) {
        if (to_string(c) == name) {
            return c;
        }
    }
    return std::nullopt;
}

double completeness_defect(const KrausChannel &ch) {
    if (ch.operators.empty()) {
        return 1.0;
    }
    CMatrix sum(2);
    for (const CMatrix &e : ch.operators) {
        if (e.dim() != 2) {
            throw ShapeError("Kraus operators must be 2x2");
        }
        sum += e.adjoint() * e;
    }
    return max_abs_diff(sum, CMatrix::identity(2));
}

bool is_cptp(const KrausChannel &ch, double tol) { return completeness_defect(ch) <= tol; }

KrausChannel phase_damping(double p) {
    check_parameter(p);
    const double keep = std::sqrt(1.0 - p);
    const double damp = std::sqrt(p);
    return {ChannelName::phase_damping,
            p,
            {CMatrix(2, {keep, 0.0, 0.0, keep}), CMatrix(2, {damp, 0.0, 0.0, 0.0}),
             CMatrix(2, {0.0, 0.0, 0.0, damp})}};
}

KrausChannel standard_channel(ChannelName name, double parameter) {
    check_parameter(parameter);
    const double p = parameter;
    auto scaled = [](double s, CMatrix m) { return cplx{s, 0.0} * std::move(m); };
    switch (name) {
    case ChannelName::phase_damping:
        return phase_damping(p);
    case ChannelName::phase_flip:
        return {name, p, {scaled(std::sqrt(1.0 - p), CMatrix::identity(2)), scaled(std::sqrt(p), sigma_z())}};
    case ChannelName::bit_flip:
        return {name, p, {scaled(std::sqrt(1.0 - p), CMatrix::identity(2)), scaled(std::sqrt(p), sigma_x())}};
    case ChannelName::bit_phase_flip:
        return {name, p, {scaled(std::sqrt(1.0 - p), CMatrix::identity(2)), scaled(std::sqrt(p), sigma_y())}};
    case ChannelName::depolarizing: {
        const double pauli_weight = std::sqrt(p / 4.0);
        return {name,
                p,
                {scaled(std::sqrt(1.0 - 3.0 * p / 4.0), CMatrix::identity(2)),
                 scaled(pauli_weight, sigma_x()), scaled(pauli_weight, sigma_y()),
                 scaled(pauli_weight, sigma_z())}};
    }
    case ChannelName::amplitude_damping:
        return {name,
                p,
                {CMatrix(2, {1.0, 0.0, 0.0, std::sqrt(1.0 - p)}),
                 CMatrix(2, {0.0, std::sqrt(p), 0.0, 0.0})}};
    }
    throw CatalogueError("unknown channel");
}

KrausChannel standard_channel(std::string_view name, double parameter) {
    const auto parsed = channel_from_string(name);
    if (!parsed) {
        throw CatalogueError("unknown channel '" + std::string(name) + "'");
    }
    return standard_channel(*parsed, parameter);
}

LocalChannel::LocalChannel(const KrausChannel &ch, QubitIndex q, std::size_t n)
    : channel(ch), qubit(q), n_qubits(n) {
    require_cptp(ch);
    for (const CMatrix &e : ch.operators) {
        CMatrix full = embed(e, q, n);
        effects.push_back(full.adjoint() * full);
        operators.push_back(std::move(full));
    }
}

CMatrix apply_channel(const CMatrix &rho, const LocalChannel &local) {
    if (rho.dim() != local.operators.front().dim()) {
        throw ShapeError("channel register size does not match state");
    }
    CMatrix out(rho.dim());
    for (const CMatrix &e : local.operators) {
        out += conjugate(e, rho);
    }
    return out;
}

CMatrix apply_channel(const CMatrix &rho, const KrausChannel &ch, QubitIndex q) {
    return apply_channel(rho, LocalChannel(ch, q, qubit_count(rho.dim())));
}

std::vector<double> kraus_branch_weights(const CMatrix &rho, const LocalChannel &local) {
    if (rho.dim() != local.operators.front().dim()) {
        throw ShapeError("channel register size does not match state");
    }
    std::vector<double> weights;
    weights.reserve(local.effects.size());
    for (const CMatrix &effect : local.effects) {
        // Tr(E rho E^dagger) = Tr(E^dagger E rho)
        weights.push_back(std::max(0.0, trace_product(effect, rho).real()));
    }
    return weights;
}

std::vector<double> kraus_branch_weights(const CMatrix &rho, const KrausChannel &ch,
                                         QubitIndex q) {
    return kraus_branch_weights(rho, LocalChannel(ch, q, qubit_count(rho.dim())));
}

KrausBranch sample_kraus_branch(const CMatrix &rho, const LocalChannel &local, Rng &rng) {
    std::vector<double> weights = kraus_branch_weights(rho, local);
    for (double &w : weights) {
        if (w < branch_floor) {
            w = 0.0;
        }
    }
    if (std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; })) {
        throw DegenerateError("every Kraus branch has negligible probability");
    }
    const std::size_t i = sample_index(weights, rng);
    CMatrix state = conjugate(local.operators[i], rho);
    state *= 1.0 / weights[i];
    return {i, weights[i], std::move(state)};
}

KrausBranch sample_kraus_branch(const CMatrix &rho, const KrausChannel &ch, QubitIndex q,
                                Rng &rng) {
    return sample_kraus_branch(rho, LocalChannel(ch, q, qubit_count(rho.dim())), rng);
}

ChannelStructureReport classify_channel_structure(const KrausChannel &ch) {
    ChannelStructureReport report{ch.name, true, false, 0.0};
    for (const CMatrix &e : ch.operators) {
        if (std::abs(e(0, 1)) > 0.0 || std::abs(e(1, 0)) > 0.0) {
            report.all_kraus_diagonal = false;
        }
    }

    CMatrix rho = ghz3().density();
    for (std::size_t leg = 0; leg < 3; ++leg) {
        rho = apply_channel(rho, ch, QubitIndex{leg});
    }
    constexpr std::size_t lo = 0b000;
    constexpr std::size_t hi = 0b111;
    double off_support = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            const bool in_block = (i == lo || i == hi) && (j == lo || j == hi);
            if (!in_block) {
                off_support += std::abs(rho(i, j));
            }
        }
    }
    const cplx coherence = rho(lo, hi);
    report.coherence_factor = std::clamp(2.0 * std::abs(coherence), 0.0, 1.0);
    report.ghz_form_preserved =
        off_support < structure_tol && std::abs(coherence.imag()) < structure_tol;
    return report;
}

nlohmann::json to_json(const KrausChannel &ch) {
    nlohmann::json ops = nlohmann::json::array();
    for (const CMatrix &e : ch.operators) {
        ops.push_back(matrix_to_json(e));
    }
    return {{"name", to_string(ch.name)}, {"parameter", ch.parameter}, {"operators", ops}};
}

nlohmann::json to_json(const ChannelStructureReport &report) {
    return {{"name", to_string(report.name)},
            {"all_kraus_diagonal", report.all_kraus_diagonal},
            {"ghz_form_preserved", report.ghz_form_preserved},
            {"coherence_factor", report.coherence_factor}};
}

} // namespace qss
