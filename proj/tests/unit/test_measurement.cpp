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

#include <doctest.h>

#include <array>
#include <cmath>

#include "closed_forms.hpp"
#include "qss/errors.hpp"
#include "qss/measurement.hpp"
#include "qss/protocol.hpp"

using namespace qss;
using testing::bob_state;
using testing::cube;
using testing::delivered;

namespace {

std::vector<double> p_grid() {
    std::vector<double> out;
    for (int i = 0; i <= 20; ++i) {
        out.push_back(i / 20.0);
    }
    return out;
}

std::vector<double> alpha_grid() {
    std::vector<double> out;
    for (int i = 1; i <= 9; ++i) {
        out.push_back(i / 10.0);
    }
    return out;
}

double block_povm_error(const CMatrix &first, const CMatrix &second, ParitySubspace cls) {
    const Povm povm = bell_block_povm(cls);
    return 0.5 * (apply_povm(second, povm)[0] + apply_povm(first, povm)[1]);
}

} // namespace

TEST_CASE("charlie_basis") {
    const MeasurementBasis h = charlie_basis(inv_sqrt2);
    CHECK(std::abs(h.plus()[0] - inv_sqrt2) < 1e-15);
    CHECK(std::abs(h.plus()[1] - inv_sqrt2) < 1e-15);
    CHECK(std::abs(h.minus()[0] - inv_sqrt2) < 1e-15);
    CHECK(std::abs(h.minus()[1] + inv_sqrt2) < 1e-15);

    const MeasurementBasis b = charlie_basis(0.3);
    CHECK(std::abs(inner(b.plus(), b.minus())) < 1e-16);
    CHECK(std::abs(b.alpha() * b.alpha() + b.beta() * b.beta() - 1.0) < 1e-14);
    CHECK(max_abs_diff(b.plus().density() + b.minus().density(), CMatrix::identity(2)) < 1e-15);

    CHECK_THROWS_AS(charlie_basis(0.0), DomainError);
    CHECK_THROWS_AS(charlie_basis(1.0), DomainError);
    CHECK_THROWS_AS(charlie_basis(-0.2), DomainError);
}

TEST_CASE("measure_qubit: Charlie's collapse matches the closed forms") {
    for (double p : {0.0, 0.3, 0.75}) {
        for (double alpha : {0.2, 0.6, inv_sqrt2}) {
            CAPTURE(p);
            CAPTURE(alpha);
            const MeasurementBasis basis(alpha);
            for (Encoding e : all_encodings) {
                const auto outcomes = measure_qubit(delivered(p, e), basis, QubitIndex{2});
                // Reduced state of Charlie's qubit is I/2 for every encoding.
                CHECK(outcomes[0].probability == doctest::Approx(0.5).epsilon(1e-14));
                CHECK(outcomes[1].probability == doctest::Approx(0.5).epsilon(1e-14));
                REQUIRE(outcomes[0].post_state);
                REQUIRE(outcomes[1].post_state);
                CHECK(max_abs_diff(*outcomes[0].post_state, bob_state(p, alpha, e, true)) < 1e-14);
                CHECK(max_abs_diff(*outcomes[1].post_state, bob_state(p, alpha, e, false)) < 1e-14);
                CHECK(assert_density_matrix(*outcomes[0].post_state, 1e-10));
                CHECK(assert_density_matrix(*outcomes[1].post_state, 1e-10));
            }
        }
    }
}

TEST_CASE("measure_qubit: simple cases") {
    const auto single = measure_qubit(basis_state(1, 0).density(), computational_basis(), QubitIndex{0});
    CHECK(single[0].probability == 1.0);
    CHECK(single[1].probability == 0.0);
    CHECK_FALSE(single[1].post_state);

    const auto ghz = measure_qubit(ghz3().density(), charlie_basis(inv_sqrt2), QubitIndex{2});
    CHECK(ghz[0].probability == doctest::Approx(0.5));
    CHECK(ghz[1].probability == doctest::Approx(0.5));

    CHECK_THROWS_AS(collapse_qubit(basis_state(2, 0).density(), basis_state(1, 1), QubitIndex{1}),
                    DegenerateError);
}

TEST_CASE("bell_measure") {
    // Noiseless identity encoding, Charlie saw |0> + |1>: Bob holds Phi+.
    const CMatrix rho = encode_secret(ghz3().density(), Encoding::I);
    const auto charlie = charlie_measure(rho, MeasurementBasis(inv_sqrt2));
    const auto bell = bell_measure(*charlie[0].post_state);
    CHECK(bell[0].probability == doctest::Approx(1.0).epsilon(1e-14));

    const auto mixed = bell_measure(0.25 * CMatrix::identity(4));
    for (const auto &o : mixed) {
        CHECK(o.probability == doctest::Approx(0.25));
    }

    const auto psi = bell_measure(bob_state(0.0, inv_sqrt2, Encoding::X, true));
    CHECK(psi[2].probability == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(bell_measure(CMatrix::identity(8)), ShapeError);
}

TEST_CASE("at p = 0 in the Hadamard basis every collapsed state is a Bell state") {
    for (Encoding e : all_encodings) {
        for (bool plus : {true, false}) {
            const auto outcomes = bell_measure(bob_state(0.0, inv_sqrt2, e, plus));
            double best = 0.0;
            for (const auto &o : outcomes) {
                best = std::max(best, o.probability);
            }
            CHECK(best == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("parity_projectors classify the collapsed states") {
    const Povm parity = parity_projectors();
    CHECK(parity.elements[0] + parity.elements[1] == CMatrix::identity(4));
    const double p = 0.4, alpha = 0.35;
    for (Encoding e : all_encodings) {
        for (bool plus : {true, false}) {
            const auto probs = apply_povm(bob_state(p, alpha, e, plus), parity);
            const std::size_t want = parity_class(e) == ParitySubspace::even ? 0 : 1;
            CHECK(probs[want] == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
    CHECK(apply_povm(0.25 * CMatrix::identity(4), parity)[0] == doctest::Approx(0.5));
}

TEST_CASE("bell_block_povm") {
    const Povm even = bell_block_povm(ParitySubspace::even);
    // Pi1 on the even block is the Phi+ projector.
    CHECK(max_abs_diff(even.elements[0], bell_state(BellState::phi_plus).density()) < 1e-15);
    CHECK(max_abs_diff(even.elements[1], bell_state(BellState::phi_minus).density()) < 1e-15);
    CHECK(even.elements[0] + even.elements[1] == parity_projectors().elements[0]);

    const Povm odd = bell_block_povm(ParitySubspace::odd);
    CHECK(max_abs_diff(odd.elements[0], bell_state(BellState::psi_plus).density()) < 1e-15);
    CHECK(odd.elements[0] + odd.elements[1] == parity_projectors().elements[1]);

    const double p = 0.3, alpha = 0.8;
    const double beta = std::sqrt(1 - alpha * alpha);
    const double err = apply_povm(bob_state(p, alpha, Encoding::I, true), even)[1];
    CHECK(err == doctest::Approx(0.5 * (1 - 2 * alpha * beta * cube(1 - p))).epsilon(1e-13));
}

TEST_CASE("apply_povm: contracts") {
    const Povm trivial = make_povm({CMatrix::identity(4)});
    CHECK(apply_povm(bob_state(0.2, 0.4, Encoding::Y, false), trivial) == std::vector<double>{1.0});

    const Povm incomplete = make_povm({0.5 * CMatrix::identity(2)});
    CHECK_THROWS_AS(apply_povm(0.5 * CMatrix::identity(2), incomplete), ContractError);

    // Even-block POVM on an odd-parity state: weight outside the support.
    CHECK_THROWS_AS(apply_povm(bob_state(0.2, 0.4, Encoding::X, true), bell_block_povm(ParitySubspace::even)),
                    ContractError);
}

TEST_CASE("apply_povm: sampled frequencies match probabilities") {
    const CMatrix rho = bob_state(0.25, 0.45, Encoding::Z, true);
    const Povm povm = bell_block_povm(ParitySubspace::even);
    const auto probs = apply_povm(rho, povm);
    Rng rng = stream_rng(31337, 0);
    constexpr int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i) {
        hits += sample_povm(rho, povm, rng) == 0 ? 1 : 0;
    }
    const double se = std::sqrt(probs[0] * (1 - probs[0]) / n);
    CHECK(std::abs(static_cast<double>(hits) / n - probs[0]) <= 3 * se);
}

TEST_CASE("helstrom: examples") {
    const CMatrix rho = bob_state(0.1, 0.3, Encoding::X, true);
    CHECK(helstrom(rho, rho, 0.5).min_error == doctest::Approx(0.5).epsilon(1e-14));

    const CMatrix zero = basis_state(1, 0).density();
    const CMatrix one = basis_state(1, 1).density();
    const HelstromResult orth = helstrom(zero, one, 0.5);
    CHECK(orth.min_error == doctest::Approx(0.0));
    CHECK(max_abs_diff(orth.povm.elements[0], zero) < 1e-15);

    for (double p : {0.0, 0.3, 0.5, 1.0}) {
        for (double alpha : {0.2, inv_sqrt2, 0.9}) {
            const double beta = std::sqrt(1 - alpha * alpha);
            const HelstromResult h = helstrom(bob_state(p, alpha, Encoding::I, true),
                                              bob_state(p, alpha, Encoding::Z, true), 0.5);
            CHECK(std::abs(h.min_error - 0.5 * (1 - 2 * alpha * beta * cube(1 - p))) < 1e-12);
            CHECK(h.min_error >= 0.0);
            CHECK(h.min_error <= 0.5);
        }
    }

    CHECK_THROWS_AS(helstrom(CMatrix::identity(2), CMatrix::identity(4), 0.5), ShapeError);
    CHECK_THROWS_AS(helstrom(zero, one, 1.5), DomainError);
}

TEST_CASE("helstrom: unequal priors and tie-breaking") {
    const CMatrix zero = basis_state(1, 0).density();
    // Identical states: guess the likelier one, error = smaller prior.
    CHECK(helstrom(zero, zero, 0.8).min_error == doctest::Approx(0.2));
    // Equal-prior identical states: Gamma = 0, every direction goes to b.
    const HelstromResult tie = helstrom(zero, zero, 0.5);
    CHECK(tie.povm.elements[0] == CMatrix(2));
    CHECK(tie.povm.elements[1] == CMatrix::identity(2));
}

TEST_CASE("block POVM error is symmetric, class-independent and Helstrom-optimal") {
    for (double p : p_grid()) {
        for (double alpha : alpha_grid()) {
            CAPTURE(p);
            CAPTURE(alpha);
            const CMatrix r1 = bob_state(p, alpha, Encoding::I, true);
            const CMatrix r4 = bob_state(p, alpha, Encoding::Z, true);
            const CMatrix r2 = bob_state(p, alpha, Encoding::X, true);
            const CMatrix r3 = bob_state(p, alpha, Encoding::Y, true);
            const Povm even = bell_block_povm(ParitySubspace::even);
            CHECK(std::abs(apply_povm(r4, even)[0] - apply_povm(r1, even)[1]) < 1e-12);

            const double e1 = block_povm_error(r1, r4, ParitySubspace::even);
            const double e2 = block_povm_error(r2, r3, ParitySubspace::odd);
            CHECK(std::abs(e1 - e2) < 1e-12);
            CHECK(std::abs(e1 - helstrom(r1, r4, 0.5).min_error) < 1e-12);
            CHECK(std::abs(e2 - helstrom(r2, r3, 0.5).min_error) < 1e-12);
        }
    }
}
