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

// Closed-form states of the noisy protocol, written entry by entry from the
// formulas so they share no code path with the channel simulation.

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "qss/cmatrix.hpp"
#include "qss/states.hpp"

namespace qss::testing {

inline double cube(double x) { return x * x * x; }

/// Two-entry "GHZ-like" 8x8 state: 1/2 on |lo><lo| and |hi><hi|,
/// coherence c on |lo><hi| + |hi><lo|.
inline CMatrix two_level_state(std::size_t dim, std::size_t lo, std::size_t hi, double pop_lo,
                               double pop_hi, double coherence) {
    CMatrix m(dim);
    m(lo, lo) = pop_lo;
    m(hi, hi) = pop_hi;
    m(lo, hi) = coherence;
    m(hi, lo) = coherence;
    return m;
}

/// GHZ after phase damping on two legs.
inline CMatrix mixed_ghz(double p) {
    return two_level_state(8, 0b000, 0b111, 0.5, 0.5, (1 - p) * (1 - p) / 2);
}

/// Encoded state rho_e^{ABC}.
inline CMatrix encoded(double p, Encoding e) {
    const double c = (1 - p) * (1 - p) / 2;
    switch (e) {
    case Encoding::I: return two_level_state(8, 0b000, 0b111, 0.5, 0.5, c);
    case Encoding::X: return two_level_state(8, 0b100, 0b011, 0.5, 0.5, c);
    case Encoding::Y: return two_level_state(8, 0b100, 0b011, 0.5, 0.5, -c);
    case Encoding::Z: return two_level_state(8, 0b000, 0b111, 0.5, 0.5, -c);
    }
    return CMatrix(8);
}

/// rho_k^{BBC}, k = 1..4 for I, X, Y, Z.
inline CMatrix delivered(double p, Encoding e) {
    const double c = cube(1 - p) / 2;
    switch (e) {
    case Encoding::I: return two_level_state(8, 0b000, 0b111, 0.5, 0.5, c);
    case Encoding::X: return two_level_state(8, 0b100, 0b011, 0.5, 0.5, c);
    case Encoding::Y: return two_level_state(8, 0b100, 0b011, 0.5, 0.5, -c);
    case Encoding::Z: return two_level_state(8, 0b000, 0b111, 0.5, 0.5, -c);
    }
    return CMatrix(8);
}

/// Bob's state rho_k^{BB+} (plus = true) or rho_k^{BB-}.
inline CMatrix bob_state(double p, double alpha, Encoding e, bool plus) {
    const double beta = std::sqrt(1 - alpha * alpha);
    const double c = alpha * beta * cube(1 - p);
    const double a2 = alpha * alpha;
    const double b2 = beta * beta;
    const double first = plus ? a2 : b2;
    const double second = plus ? b2 : a2;
    const double sign = plus ? 1.0 : -1.0;
    switch (e) {
    // |00> carries first, |11> second
    case Encoding::I: return two_level_state(4, 0b00, 0b11, first, second, sign * c);
    case Encoding::Z: return two_level_state(4, 0b00, 0b11, first, second, -sign * c);
    // |10> carries first, |01> second
    case Encoding::X: return two_level_state(4, 0b10, 0b01, first, second, sign * c);
    case Encoding::Y: return two_level_state(4, 0b10, 0b01, first, second, -sign * c);
    }
    return CMatrix(4);
}

/// Random mixed state G G^dagger / Tr(G G^dagger) with Gaussian G.
inline CMatrix random_density(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    CMatrix g(dim);
    for (auto &z : g.data()) {
        z = {normal(rng), normal(rng)};
    }
    CMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

inline CMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    CMatrix g(dim);
    for (auto &z : g.data()) {
        z = {normal(rng), normal(rng)};
    }
    return 0.5 * (g + g.adjoint());
}

inline CMatrix random_matrix(std::size_t dim, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix g(dim);
    for (auto &z : g.data()) {
        z = {u(rng), u(rng)};
    }
    return g;
}

/// Kronecker product straight from the index definition.
inline CMatrix kron_by_definition(const CMatrix &a, const CMatrix &b) {
    const std::size_t da = a.dim(), db = b.dim();
    CMatrix out(da * db);
    for (std::size_t r = 0; r < da * db; ++r) {
        for (std::size_t c = 0; c < da * db; ++c) {
            out(r, c) = a(r / db, c / db) * b(r % db, c % db);
        }
    }
    return out;
}

} // namespace qss::testing
