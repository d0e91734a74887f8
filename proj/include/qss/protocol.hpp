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

/**
 * @file
 * Three-party secret sharing over a shared GHZ state.
 *
 * Register layout is |A B C> throughout: factor 0 is Alice's qubit (which
 * later travels to Bob), factor 1 is Bob's own qubit, factor 2 stays with
 * Charlie. Renaming A to B after the transfer is purely logical.
 *
 * Noiseless run: Alice encodes two bits with I, sigma_x, i sigma_y or
 * sigma_z on her qubit, hands it to Bob, Charlie measures in the Hadamard
 * basis and announces the result, Bob performs a Bell measurement and reads
 * the secret off the decode table.
 *
 * Noisy run: both outgoing qubits cross a channel, Alice's qubit crosses it
 * a second time on its way to Bob, and Charlie measures in a real basis
 * {a|0> + b|1>, b|0> - a|1>}. Bob first projects onto the even/odd parity
 * subspace (which recovers the first bit exactly) and then discriminates the
 * two remaining candidates with a two-outcome POVM.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "qss/channels.hpp"
#include "qss/measurement.hpp"
#include "qss/states.hpp"

namespace qss {

inline constexpr QubitIndex alice_qubit{0};
inline constexpr QubitIndex bob_qubit{1};
inline constexpr QubitIndex charlie_qubit{2};

/// Charlie's announced bit: 0 for |+>, 1 for |->.
enum class CharlieOutcome { plus = 0, minus = 1 };

struct DecodeTableEntry {
    BellState bell_outcome;
    CharlieOutcome charlie_outcome;
    Encoding decoded;
};

/// The eight rows of the noiseless decode table.
const std::array<DecodeTableEntry, 8> &decode_table();
Encoding decode(BellState bell, CharlieOutcome charlie);

struct PureBranch {
    CharlieOutcome charlie;
    BellState bell;
    /// Joint probability of (charlie, bell).
    double probability;
    Encoding decoded;
};

/// Every (Charlie, Bell) branch of positive probability for one secret.
std::vector<PureBranch> pure_protocol_branches(Encoding secret);

/// Decoded secret of the noiseless protocol. Throws ContractError if two
/// branches disagree.
Encoding run_pure_protocol(Encoding secret);

struct ProtocolConfig {
    double p = 0.0;
    double alpha = 0.70710678118654752;
    ChannelName channel = ChannelName::phase_damping;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;

    /// Throws DomainError for out-of-range values.
    void validate() const;
};

/// GHZ after Charlie sends factors 0 and 1 through the channel.
CMatrix evolve_noisy_ghz(double p, ChannelName channel);

/// Alice's encoding unitary on factor 0.
CMatrix encode_secret(const CMatrix &rho, Encoding secret);

/// One more pass of factor 0 through the channel.
CMatrix alice_sends_to_bob(const CMatrix &rho, double p, ChannelName channel);

/// Charlie's two outcomes; post states are Bob's two-qubit states.
std::array<MeasurementOutcome, 2> charlie_measure(const CMatrix &rho,
                                                  const MeasurementBasis &basis);

/// State held by Bob and Charlie for one secret (encoding then transfer).
CMatrix shared_state(double p, ChannelName channel, Encoding secret);

/// Discrimination error 1/2 (1 - 2 a b (1-p)^3). alpha may be 0 or 1 here
/// (the formula's limit).
double analytic_error_rate(double p, double alpha);
/// 2 a b (1-p)^3.
double analytic_success(double p, double alpha);
/// 1 + 2 a b (1-p)^3.
double analytic_bits(double p, double alpha);

ParitySubspace parity_class(Encoding e);

/// Noisy decoding: Bob's parity class and POVM outcome (0 = Pi1, 1 = Pi2)
/// name a Bell state, which combines with Charlie's bit as in the
/// noiseless table.
Encoding decode_noisy(ParitySubspace cls, std::size_t povm_outcome, CharlieOutcome charlie);

/// Probability that Bob decodes the secret, computed on density matrices
/// without sampling, averaged over the four secrets.
double exact_decode_probability(const ProtocolConfig &config);

struct TrialResult {
    Encoding decoded;
    CharlieOutcome charlie;
    ParitySubspace parity;
};

/// One stochastic run with every channel unravelled into Kraus branches.
TrialResult run_noisy_protocol_trial(const ProtocolConfig &config, Encoding secret, Rng &rng);

struct ProtocolReport {
    ProtocolConfig config;
    double analytic_error_rate = 0.0;
    double analytic_success = 0.0;
    double analytic_bits = 0.0;
    /// Density-matrix value of 2 P(decoded == secret) - 1 for the configured
    /// channel; equals analytic_success for phase damping.
    double exact_success = 0.0;
    std::optional<double> empirical_success;
    std::optional<double> stderr_success;
    std::optional<double> parity_accuracy;
    /// [true encoding][decoded encoding].
    std::array<std::array<std::uint64_t, 4>, 4> confusion_matrix{};
    std::optional<std::array<double, 2>> charlie_outcome_frequencies;
};

/// Trials cycle through the secrets I, X, Y, Z. Trials are grouped in fixed
/// blocks, each with its own generator stream, so the report does not depend
/// on `workers`.
ProtocolReport run_campaign(const ProtocolConfig &config, unsigned workers = 1);

/// Fixed-field JSON; reals rounded to 12 significant digits.
nlohmann::ordered_json to_json(const ProtocolReport &report);

} // namespace qss
