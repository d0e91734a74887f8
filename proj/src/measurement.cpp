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

#include "qss/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qss/errors.hpp"

namespace qss {

namespace {

constexpr double collapse_floor = 1e-15;
constexpr double completeness_tol = 1e-12;
constexpr double probability_sum_tol = 1e-10;
constexpr double negative_clamp = 1e-12;
constexpr double helstrom_zero = 1e-12;

std::vector<QubitIndex> all_but(std::size_t n, QubitIndex q) {
    std::vector<QubitIndex> keep;
    for (std::size_t f = 0; f < n; ++f) {
        if (f != q.value()) {
            keep.emplace_back(f);
        }
    }
    return keep;
}

MeasurementOutcome outcome_for(const CMatrix &rho, const PureState &v, QubitIndex q,
                               std::size_t index) {
    const std::size_t n = qubit_count(rho.dim());
    const CMatrix proj = embed(v.density(), q, n);
    const double prob = std::clamp(trace_product(proj, rho).real(), 0.0, 1.0);
    MeasurementOutcome out{index, prob, std::nullopt};
    if (prob >= collapse_floor) {
        if (n == 1) {
            // nothing left after measuring the only qubit
            out.post_state = CMatrix(1, {1.0});
        } else {
            const auto keep = all_but(n, q);
            CMatrix reduced = partial_trace(proj * rho * proj, keep);
            reduced *= 1.0 / prob;
            out.post_state = std::move(reduced);
        }
    }
    return out;
}

CMatrix block_operator(ParitySubspace subspace, double off_diagonal) {
    const std::size_t lo = subspace == ParitySubspace::even ? 0b00 : 0b01;
    const std::size_t hi = subspace == ParitySubspace::even ? 0b11 : 0b10;
    CMatrix m(4);
    m(lo, lo) = 0.5;
    m(hi, hi) = 0.5;
    m(lo, hi) = off_diagonal;
    m(hi, lo) = off_diagonal;
    return m;
}

} // namespace

QubitBasis computational_basis() { return {basis_state(1, 0), basis_state(1, 1)}; }

MeasurementBasis::MeasurementBasis(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("basis parameter alpha = " + std::to_string(alpha) +
                          " outside the open interval (0, 1)");
    }
    beta_ = std::sqrt(1.0 - alpha * alpha);
}

PureState MeasurementBasis::plus() const { return PureState({alpha_, beta_}); }
PureState MeasurementBasis::minus() const { return PureState({beta_, -alpha_}); }

MeasurementBasis charlie_basis(double alpha) { return MeasurementBasis(alpha); }

Povm make_povm(std::vector<CMatrix> elements) {
    if (elements.empty()) {
        throw ContractError("POVM needs at least one element");
    }
    const std::size_t dim = elements.front().dim();
    return {std::move(elements), CMatrix::identity(dim)};
}

std::array<MeasurementOutcome, 2> measure_qubit(const CMatrix &rho, const QubitBasis &basis,
                                                QubitIndex q) {
    return {outcome_for(rho, basis.first, q, 0), outcome_for(rho, basis.second, q, 1)};
}

std::array<MeasurementOutcome, 2> measure_qubit(const CMatrix &rho,
                                                const MeasurementBasis &basis, QubitIndex q) {
    return measure_qubit(rho, basis.vectors(), q);
}

CMatrix collapse_qubit(const CMatrix &rho, const PureState &outcome, QubitIndex q) {
    MeasurementOutcome out = outcome_for(rho, outcome, q, 0);
    if (!out.post_state) {
        throw DegenerateError("collapse onto an outcome with probability " +
                              std::to_string(out.probability));
    }
    return std::move(*out.post_state);
}

MeasurementOutcome sample_measure_qubit(const CMatrix &rho, const QubitBasis &basis,
                                        QubitIndex q, Rng &rng) {
    auto outcomes = measure_qubit(rho, basis, q);
    const std::array<double, 2> weights{outcomes[0].post_state ? outcomes[0].probability : 0.0,
                                        outcomes[1].post_state ? outcomes[1].probability : 0.0};
    return std::move(outcomes[sample_index(weights, rng)]);
}

std::array<MeasurementOutcome, 4> bell_measure(const CMatrix &rho2) {
    if (rho2.dim() != 4) {
        throw ShapeError("Bell measurement needs a two-qubit state");
    }
    std::array<MeasurementOutcome, 4> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        const CMatrix proj = bell_state(all_bell_states[i]).density();
        const double prob = std::clamp(trace_product(proj, rho2).real(), 0.0, 1.0);
        out[i] = {i, prob, prob >= collapse_floor ? std::optional<CMatrix>(proj) : std::nullopt};
    }
    return out;
}

Povm parity_projectors() {
    const std::array<double, 4> even{1.0, 0.0, 0.0, 1.0};
    const std::array<double, 4> odd{0.0, 1.0, 1.0, 0.0};
    return make_povm({CMatrix::diagonal(even), CMatrix::diagonal(odd)});
}

Povm bell_block_povm(ParitySubspace subspace) {
    return {{block_operator(subspace, 0.5), block_operator(subspace, -0.5)},
            parity_projectors().elements[subspace == ParitySubspace::even ? 0 : 1]};
}

HelstromResult helstrom(const CMatrix &rho_a, const CMatrix &rho_b, double prior_a) {
    if (rho_a.dim() != rho_b.dim()) {
        throw ShapeError("helstrom: states have different dimensions");
    }
    if (!(prior_a >= 0.0 && prior_a <= 1.0)) {
        throw DomainError("helstrom: prior outside [0, 1]");
    }
    CMatrix gamma = cplx{prior_a, 0.0} * rho_a;
    gamma.add_scaled(-(1.0 - prior_a), rho_b);

    const HermitianEigen eig = hermitian_eigen(gamma);
    CMatrix element_a(gamma.dim());
    for (std::size_t k = 0; k < eig.values.size(); ++k) {
        if (eig.values[k] > helstrom_zero) {
            element_a += CMatrix::outer(eig.vectors[k]);
        }
    }
    CMatrix element_b = CMatrix::identity(gamma.dim()) - element_a;

    const double min_error = std::clamp(0.5 * (1.0 - trace_norm(gamma)), 0.0, 0.5);
    return {make_povm({std::move(element_a), std::move(element_b)}), min_error};
}

std::vector<double> apply_povm(const CMatrix &rho, const Povm &povm) {
    if (povm.elements.empty()) {
        throw ContractError("POVM has no elements");
    }
    CMatrix sum(povm.support.dim());
    for (const CMatrix &e : povm.elements) {
        if (e.dim() != rho.dim()) {
            throw ShapeError("POVM element dimension does not match state");
        }
        sum += e;
    }
    const double defect = max_abs_diff(sum, povm.support);
    if (defect > completeness_tol) {
        throw ContractError("POVM elements do not sum to their support (defect " +
                            std::to_string(defect) + ")");
    }
    const double supported = trace_product(povm.support, rho).real();
    if (std::abs(supported - 1.0) > probability_sum_tol) {
        throw ContractError("state has weight " + std::to_string(1.0 - supported) +
                            " outside the POVM support");
    }

    std::vector<double> probs;
    probs.reserve(povm.elements.size());
    for (const CMatrix &e : povm.elements) {
        const double p = trace_product(e, rho).real();
        if (p < -negative_clamp) {
            throw ContractError("negative outcome probability " + std::to_string(p));
        }
        probs.push_back(std::clamp(p, 0.0, 1.0));
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::abs(total - 1.0) > probability_sum_tol) {
        throw ContractError("outcome probabilities sum to " + std::to_string(total));
    }
    return probs;
}

std::size_t sample_povm(const CMatrix &rho, const Povm &povm, Rng &rng) {
    const std::vector<double> probs = apply_povm(rho, povm);
    return sample_index(probs, rng);
}

CMatrix project(const CMatrix &rho, const CMatrix &projector) {
    const double weight = trace_product(projector, rho).real();
    if (weight < collapse_floor) {
        throw DegenerateError("projection onto a subspace with weight " + std::to_string(weight));
    }
    CMatrix out = projector * rho * projector;
    out *= 1.0 / weight;
    return out;
}

} // namespace qss
