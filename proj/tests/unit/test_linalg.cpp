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
#include <random>

#include "closed_forms.hpp"
#include "qss/errors.hpp"
#include "qss/linalg.hpp"
#include "qss/states.hpp"

using namespace qss;
using qss::testing::kron_by_definition;

namespace {

CMatrix proj0() { return CMatrix(2, {1.0, 0.0, 0.0, 0.0}); }
CMatrix proj1() { return CMatrix(2, {0.0, 0.0, 0.0, 1.0}); }

} // namespace

TEST_CASE("tensor: small cases") {
    CHECK(tensor(CMatrix::identity(2), CMatrix::identity(2)) == CMatrix::identity(4));

    const CMatrix x_i = tensor(sigma_x(), CMatrix::identity(2));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const bool one = (r == 0 && c == 2) || (r == 1 && c == 3) || (r == 2 && c == 0) ||
                             (r == 3 && c == 1);
            CHECK(x_i(r, c) == cplx{one ? 1.0 : 0.0, 0.0});
        }
    }

    const std::array<double, 4> d{0.0, 1.0, 0.0, 0.0};
    CHECK(tensor(proj0(), proj1()) == CMatrix::diagonal(d));
}

TEST_CASE("tensor: refuses results above 16x16") {
    CHECK_THROWS_AS(tensor(CMatrix::identity(8), CMatrix::identity(4)), SizeError);
    CHECK_NOTHROW(tensor(CMatrix::identity(8), CMatrix::identity(2)));
}

TEST_CASE("tensor: matches the index definition, is associative, multiplies traces") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const CMatrix a = testing::random_matrix(2, rng);
        const CMatrix b = testing::random_matrix(2, rng);
        const CMatrix c = testing::random_matrix(2, rng);
        CHECK(tensor(a, b) == kron_by_definition(a, b));
        CHECK(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))) < 1e-14);
        CHECK(std::abs(tensor(a, b).trace() - a.trace() * b.trace()) < 1e-12);
    }
}

TEST_CASE("partial_trace: examples") {
    const CMatrix ghz = ghz3().density();
    const std::array keep_a{QubitIndex{0}};
    CHECK(max_abs_diff(partial_trace(ghz, keep_a), 0.5 * CMatrix::identity(2)) < 1e-15);

    const CMatrix zero_zero = basis_state(2, 0).density();
    CHECK(max_abs_diff(partial_trace(zero_zero, keep_a), proj0()) == 0.0);

    // Trace over C of the two-leg dephased GHZ, summed by hand: only the
    // c = c' blocks survive, which kills |000><111|.
    const double p = 0.35;
    const CMatrix rho = testing::mixed_ghz(p);
    CMatrix by_hand(4);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            for (std::size_t t = 0; t < 2; ++t) {
                by_hand(r, c) += rho(2 * r + t, 2 * c + t);
            }
        }
    }
    const std::array keep_ab{QubitIndex{0}, QubitIndex{1}};
    const CMatrix reduced = partial_trace(rho, keep_ab);
    CHECK(max_abs_diff(reduced, by_hand) < 1e-15);
    const std::array<double, 4> expected{0.5, 0.0, 0.0, 0.5};
    CHECK(max_abs_diff(reduced, CMatrix::diagonal(expected)) < 1e-15);
}

TEST_CASE("partial_trace: errors") {
    const CMatrix rho = CMatrix::identity(8);
    const std::array<std::size_t, 2> wrong_dims{2, 2};
    const std::array keep{QubitIndex{0}};
    CHECK_THROWS_AS(partial_trace(rho, wrong_dims, keep), ShapeError);
    const std::array out_of_range{QubitIndex{3}};
    CHECK_THROWS_AS(partial_trace(rho, out_of_range), ShapeError);
    CHECK_THROWS_AS(partial_trace(rho, std::span<const QubitIndex>{}), ShapeError);
    CHECK_THROWS_AS(partial_trace(CMatrix::identity(3), keep), ShapeError);
}

TEST_CASE("partial_trace: invariants on random states") {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 30; ++rep) {
        const CMatrix a = testing::random_density(2, rng);
        const CMatrix b = testing::random_density(4, rng);
        const CMatrix rho8 = testing::random_density(8, rng);

        const std::array all{QubitIndex{0}, QubitIndex{1}, QubitIndex{2}};
        CHECK(max_abs_diff(partial_trace(rho8, all), rho8) < 1e-15);

        for (std::size_t q = 0; q < 3; ++q) {
            const std::array keep{QubitIndex{q}};
            CHECK(std::abs(partial_trace(rho8, keep).trace() - rho8.trace()) < 1e-12);
        }

        // Round trip with an unnormalized second factor.
        CMatrix b_scaled = b;
        b_scaled *= 0.7;
        const std::array keep_first{QubitIndex{0}};
        const CMatrix back = partial_trace(tensor(a, b_scaled), keep_first);
        CHECK(max_abs_diff(back, b_scaled.trace() * a) < 1e-12);

        // Non-qubit factor sizes.
        const std::array<std::size_t, 2> dims{2, 4};
        const std::array keep_second{QubitIndex{1}};
        CHECK(max_abs_diff(partial_trace(tensor(a, b), dims, keep_second), b) < 1e-12);
    }
}

TEST_CASE("partial_trace over every factor but one is the scalar trace") {
    std::mt19937_64 rng(13);
    const CMatrix g = testing::random_matrix(8, rng);
    const std::array<std::size_t, 1> whole{8};
    const std::array keep{QubitIndex{0}};
    CHECK(max_abs_diff(partial_trace(g, whole, keep), g) == 0.0);
    const std::array<std::size_t, 4> with_unit{1, 2, 2, 2};
    const CMatrix scalar = partial_trace(g, with_unit, keep);
    REQUIRE(scalar.dim() == 1);
    CHECK(std::abs(scalar(0, 0) - g.trace()) < 1e-12);
}

TEST_CASE("trace_norm: examples") {
    CHECK(trace_norm(CMatrix(4)) == 0.0);
    const std::array<double, 2> d{1.0, -1.0};
    CHECK(trace_norm(CMatrix::diagonal(d)) == doctest::Approx(2.0).epsilon(1e-15));

    const double p = 0.2, alpha = 0.6;
    const double beta = std::sqrt(1 - alpha * alpha);
    const CMatrix diff = testing::bob_state(p, alpha, Encoding::I, true) -
                         testing::bob_state(p, alpha, Encoding::Z, true);
    const double expected = 4 * alpha * beta * testing::cube(1 - p);
    CHECK(std::abs(trace_norm(diff) - expected) < 1e-14);
    // Same value from the Hermitian eigenvalues.
    double by_eigen = 0.0;
    for (double ev : hermitian_eigenvalues(diff)) {
        by_eigen += std::abs(ev);
    }
    CHECK(std::abs(by_eigen - expected) < 1e-14);
}

TEST_CASE("trace_norm: triangle inequality on random Hermitian pairs") {
    std::mt19937_64 rng(14);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = std::size_t{1} << (1 + rep % 3);
        const CMatrix a = testing::random_hermitian(n, rng);
        const CMatrix b = testing::random_hermitian(n, rng);
        CHECK(trace_norm(a + b) <= trace_norm(a) + trace_norm(b) + 1e-10);
        CHECK(trace_norm(a) >= 0.0);
    }
}

TEST_CASE("assert_density_matrix") {
    CHECK(assert_density_matrix(0.5 * CMatrix::identity(2)));

    const std::array<double, 2> bad{1.5, -0.5};
    const DensityCheck neg = assert_density_matrix(CMatrix::diagonal(bad));
    CHECK_FALSE(neg);
    CHECK(neg.hermitian);
    CHECK(neg.unit_trace);
    CHECK_FALSE(neg.positive);
    CHECK(neg.diagnostic.find("negative eigenvalue") != std::string::npos);

    const CMatrix skew(2, {0.5, 1.0, 0.0, 0.5});
    const DensityCheck not_herm = assert_density_matrix(skew);
    CHECK_FALSE(not_herm.hermitian);
    CHECK(not_herm.diagnostic.find("not Hermitian") != std::string::npos);

    const DensityCheck trace2 = assert_density_matrix(CMatrix::identity(2));
    CHECK_FALSE(trace2.unit_trace);

    CHECK(assert_density_matrix(testing::mixed_ghz(0.3)));
}

TEST_CASE("embed places the operator on the requested factor") {
    const CMatrix z = sigma_z();
    CHECK(embed(z, QubitIndex{0}, 3) == tensor(z, CMatrix::identity(4)));
    CHECK(embed(z, QubitIndex{1}, 3) ==
          tensor(tensor(CMatrix::identity(2), z), CMatrix::identity(2)));
    CHECK(embed(z, QubitIndex{2}, 3) == tensor(CMatrix::identity(4), z));
    CHECK_THROWS_AS(embed(z, QubitIndex{3}, 3), ShapeError);
}

TEST_CASE("CMatrix construction contracts") {
    CHECK_THROWS_AS(CMatrix(0), ShapeError);
    CHECK_THROWS_AS(CMatrix(17), SizeError);
    CHECK_THROWS_AS(CMatrix(2, {1.0, 2.0, 3.0}), ShapeError);
    CHECK_THROWS_AS(CMatrix(1, {cplx{std::nan(""), 0.0}}), ContractError);
    CHECK_THROWS_AS(CMatrix(2) + CMatrix(4), ShapeError);
    CHECK(qubit_count(8) == 3);
    CHECK_THROWS_AS(qubit_count(6), ShapeError);
}
